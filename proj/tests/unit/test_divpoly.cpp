#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "quadtor/divpoly.hpp"
#include "quadtor/factor.hpp"

using namespace quadtor;

namespace {

Rational q(long n, long d = 1) { return make_rational(Integer(n), Integer(d)); }

UniPoly poly(std::initializer_list<long> c) { return UniPoly(c); }

}  // namespace

TEST(UniPoly, ArithmeticAndDivision) {
  const UniPoly f = poly({-1, 0, 1});  // X^2 - 1
  const UniPoly g = poly({1, 1});
  auto [quo, rem] = divmod(f, g);
  EXPECT_EQ(quo, poly({-1, 1}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(gcd(f * poly({2, 1}), poly({-1, 1}) * poly({3, 1})), poly({-1, 1}));
  EXPECT_THROW(divmod(f, UniPoly()), DomainError);
  EXPECT_EQ((f - f).degree(), -1);
  EXPECT_EQ(f.derivative(), poly({0, 2}));
  EXPECT_EQ(f.eval(q(3, 2)), q(5, 4));
  const UniPoly h(std::vector<Rational>{q(1, 2), q(-3, 4)});
  EXPECT_EQ(primitive_integer_part(h), (std::vector<Integer>{-2, 3}));
}

TEST(DivisionPolynomial, LowIndices) {
  const CurveQ E(q(-7), q(10));
  const Rational A = E.A(), B = E.B();
  EXPECT_EQ(division_polynomial(E, 1), UniPoly::constant(1));
  EXPECT_EQ(division_polynomial(E, 2), UniPoly::constant(1));
  EXPECT_EQ(division_polynomial(E, 3),
            UniPoly(std::vector<Rational>{Rational(-A * A), Rational(12 * B), Rational(6 * A), q(0), q(3)}));
  EXPECT_EQ(division_polynomial(E, 3).degree(), 4);
  EXPECT_EQ(division_polynomial(E, 5).degree(), 12);
  EXPECT_THROW(division_polynomial(E, 0), DomainError);
  EXPECT_THROW(division_polynomial(E, 17), DomainError);
}

TEST(DivisionPolynomial, DegreeLaw) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 4; ++trial) {
    const CurveQ E(fixtures::random_rational(rng, 40, 5), fixtures::random_rational(rng, 40, 5));
    DivisionPolynomials dp(E);
    for (int m = 1; m <= kMaxDivisionIndex; ++m) {
      const int expected = m % 2 ? (m * m - 1) / 2 : (m * m - 4) / 2;
      EXPECT_EQ(dp.psi(m).degree(), expected) << "m = " << m;
      EXPECT_EQ(dp.psi(m).leading(), m % 2 ? q(m) : q(m, 2));
    }
  }
}

TEST(DivisionPolynomial, RootsOfPsi3AreThreeTorsion) {
  // over the splitting field of an irreducible quadratic factor, each root gives 3P = O
  const ShortModel sm = fixtures::short_model("19a3");
  DivisionPolynomials dp(sm.curve);
  const auto& fs = dp.factors(3);
  ASSERT_FALSE(fs.empty());
  EXPECT_EQ(fs.front().degree(), 1);
  const Rational x = -fs.front()[0];
  const auto y = rational_sqrt(sm.curve.rhs(x));
  ASSERT_TRUE(y.has_value());
  EXPECT_TRUE(scalar_mul(sm.curve, 3, make_point(sm.curve, x, *y)).is_infinity());
}

TEST(DivisionPolynomial, CacheMatchesFreeFunction) {
  const ShortModel sm = fixtures::short_model("37a1");
  DivisionPolynomials dp(sm.curve);
  for (int m : {7, 12, 16}) EXPECT_EQ(dp.psi(m), division_polynomial(sm.curve, m));
}

TEST(SmallFactors, Examples) {
  EXPECT_EQ(small_factors(poly({-5, 0, 1}), 2), (std::vector<UniPoly>{poly({-5, 0, 1})}));
  const UniPoly f = poly({-2, 1}) * poly({1, 0, 1}) * poly({1, 1, 0, 0, 1});
  EXPECT_EQ(small_factors(f, 2), (std::vector<UniPoly>{poly({-2, 1}), poly({1, 0, 1})}));
  EXPECT_EQ(small_factors(f, 1), (std::vector<UniPoly>{poly({-2, 1})}));
  EXPECT_TRUE(small_factors(poly({1, 1, 0, 0, 1}), 2).empty());
  EXPECT_TRUE(small_factors(UniPoly::constant(7), 2).empty());
  EXPECT_THROW(small_factors(UniPoly(), 2), DomainError);
  EXPECT_THROW(small_factors(f, 3), DomainError);
}

TEST(SmallFactors, Multiplicities) {
  const UniPoly a = poly({3, 1}), b = poly({2, 0, 1});
  const UniPoly f = a * a * a * b * b * poly({-2, 0, 0, 1});
  EXPECT_EQ(small_factors(f, 2), (std::vector<UniPoly>{a, a, a, b, b}));
}

TEST(SmallFactors, RationalCoefficientsAndLeadingTerms) {
  // (2X - 3)(X^2 + X/3 + 5) scaled by 7/11
  const UniPoly f = UniPoly(std::vector<Rational>{q(-3), q(2)}) *
                    UniPoly(std::vector<Rational>{q(5), q(1, 3), q(1)}) * q(7, 11);
  EXPECT_EQ(small_factors(f, 2),
            (std::vector<UniPoly>{UniPoly(std::vector<Rational>{q(-3, 2), q(1)}),
                                  UniPoly(std::vector<Rational>{q(5), q(1, 3), q(1)})}));
}

TEST(SmallFactors, SplitsModularlyButNotOverQ) {
  // X^4 + 1 splits into quadratics modulo every prime but is irreducible over Q
  EXPECT_TRUE(small_factors(poly({1, 0, 0, 0, 1}), 2).empty());
  // X^4 - 10X^2 + 1 (minimal polynomial of sqrt2 + sqrt3) likewise
  EXPECT_TRUE(small_factors(poly({1, 0, -10, 0, 1}), 2).empty());
  // (X^2 - 2)(X^2 - 3): both quadratics are found
  EXPECT_EQ(small_factors(poly({6, 0, -5, 0, 1}), 2), (std::vector<UniPoly>{poly({-3, 0, 1}), poly({-2, 0, 1})}));
}

TEST(SmallFactors, PlantedProducts) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const auto planted = fixtures::planted_product(rng, trial < 10 ? 6 : 30);
    EXPECT_EQ(small_factors(planted.product, 2), planted.small) << "trial " << trial;
  }
}

TEST(SmallFactors, FactorsDivideAndAreIrreducible) {
  const ShortModel sm = fixtures::short_model("30a7");
  DivisionPolynomials dp(sm.curve);
  for (int m : {2, 3, 4, 5, 8, 9}) {
    const UniPoly& f = m == 2 ? dp.two_torsion_cubic() : dp.psi(m);
    for (const UniPoly& g : dp.factors(m)) {
      EXPECT_EQ(g.leading(), q(1));
      EXPECT_TRUE(divmod(f, g).second.is_zero());
      if (g.degree() == 2) EXPECT_FALSE(rational_sqrt(g[1] * g[1] - 4 * g[0]).has_value());
    }
  }
}

TEST(RootsInField, Examples) {
  const UniPoly f = poly({-5, 0, 1});
  const SquarefreeD five(5L);
  const auto r = roots_in_field(f, QuadraticField(five));
  EXPECT_EQ(r, (std::vector<QuadElem>{QuadElem(q(0), q(-1), five), QuadElem(q(0), q(1), five)}));
  EXPECT_TRUE(roots_in_field(f, QuadraticField(SquarefreeD(-5L))).empty());
  EXPECT_TRUE(roots_in_field(f).empty());
  EXPECT_EQ(roots_in_field(poly({-4, 0, 1})), (std::vector<Rational>{q(-2), q(2)}));
}

TEST(RootsInField, CubicOf30a7SplitsOverQSqrt10) {
  const ShortModel sm = fixtures::short_model("30a7");
  DivisionPolynomials dp(sm.curve);
  EXPECT_EQ(roots_in_field(dp.two_torsion_cubic(), QuadraticField(SquarefreeD(10L))).size(), 3u);
  EXPECT_EQ(roots_in_field(dp.two_torsion_cubic(), QuadraticField(SquarefreeD(-10L))).size(), 1u);
}

TEST(PointsOfOrder, Examples) {
  const ShortModel e11 = fixtures::short_model("11a1");
  EXPECT_EQ(points_of_order(e11.curve, 5, RationalField{}).size(), 4u);
  const ShortModel e19 = fixtures::short_model("19a1");
  EXPECT_EQ(points_of_order(e19.curve, 3, QuadraticField(SquarefreeD(-3L))).size(), 8u);
  const ShortModel e30 = fixtures::short_model("30a7");
  for (const auto& P : points_of_order(e30.curve, 2, RationalField{})) EXPECT_EQ(sgn(P.y()), 0);
  EXPECT_EQ(points_of_order(e30.curve, 1, RationalField{}).size(), 1u);
  EXPECT_THROW(points_of_order(e30.curve, 17, RationalField{}), DomainError);
}

TEST(PointsOfOrder, ExactOrderAndOnCurve) {
  const ShortModel sm = fixtures::short_model("210e2");
  DivisionPolynomials dp(sm.curve);
  for (int m : {2, 4, 8}) {
    for (const auto& P : points_of_order(dp, m, RationalField{})) {
      EXPECT_TRUE(on_curve(sm.curve, P));
      EXPECT_EQ(point_order(sm.curve, P), m);
    }
  }
  EXPECT_EQ(points_of_order(dp, 8, RationalField{}).size(), 8u);
}

TEST(PointsOfOrder, AgreesWithGridSearch) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coeff(-6, 6);
  int curves = 0;
  while (curves < 8) {
    const long a = coeff(rng), b = coeff(rng);
    if (4 * a * a * a + 27 * b * b == 0) continue;
    ++curves;
    const CurveQ E(q(a), q(b));
    DivisionPolynomials dp(E);
    std::vector<PointQ> via_divpoly;
    for (int m = 2; m <= 5; ++m) {
      auto p = points_of_order(dp, m, RationalField{});
      via_divpoly.insert(via_divpoly.end(), p.begin(), p.end());
    }
    std::sort(via_divpoly.begin(), via_divpoly.end(), [](const auto& x, const auto& y) { return compare_points(x, y) < 0; });
    EXPECT_EQ(fixtures::grid_torsion_points(E, 200, 3, 5), via_divpoly) << E.to_string();
  }
}
