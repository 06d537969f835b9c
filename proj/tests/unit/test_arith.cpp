#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "quadtor/errors.hpp"
#include "quadtor/quad.hpp"

using namespace quadtor;

namespace {

Rational q(long n, long d = 1) { return make_rational(Integer(n), Integer(d)); }

bool trial_squarefree(const Integer& n) {
  Integer m = abs(n);
  for (long p = 2; p <= 10000; ++p)
    if (m % (p * p) == 0) return false;
  return true;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rational r = make_rational(Integer(6), Integer(-4));
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(make_rational(Integer(0), Integer(-7)).get_den(), 1);
  EXPECT_THROW(make_rational(Integer(1), Integer(0)), DomainError);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-12/8"), q(-3, 2));
  EXPECT_EQ(parse_rational("+7"), q(7));
  EXPECT_EQ(to_string(q(-3, 2)), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("abc"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
}

TEST(SquarefreeDecompose, Examples) {
  auto a = squarefree_decompose(q(12));
  EXPECT_EQ(a.d, 3);
  EXPECT_EQ(a.r, q(2));
  auto b = squarefree_decompose(q(-5));
  EXPECT_EQ(b.d, -5);
  EXPECT_EQ(b.r, q(1));
  auto c = squarefree_decompose(q(8, 9));
  EXPECT_EQ(c.d, 2);
  EXPECT_EQ(c.r, q(2, 3));
  EXPECT_EQ(squarefree_decompose(q(49, 4)).d, 1);
  EXPECT_THROW(squarefree_decompose(q(0)), DomainError);
}

TEST(SquarefreeDecompose, RandomRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Rational x = fixtures::random_rational(rng, 1'000'000, 5000);
    if (sgn(x) == 0) continue;
    const auto [d, r] = squarefree_decompose(x);
    EXPECT_EQ(Rational(d) * r * r, x);
    EXPECT_GT(sgn(r), 0);
    EXPECT_TRUE(trial_squarefree(d));
  }
}

TEST(SquarefreeDecompose, LargeSemiprimeRadicand) {
  // 1000003 * 1000033 * 7^2 exercises the rho fallback
  const Integer n = Integer(1000003) * Integer(1000033) * 49;
  const auto [d, r] = squarefree_decompose(Rational(n));
  EXPECT_EQ(d, Integer(1000003) * Integer(1000033));
  EXPECT_EQ(r, q(7));
}

TEST(FactorInteger, KnownValues) {
  const auto f = factor_integer(Integer(-360));
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0], (std::pair<Integer, unsigned>{2, 3}));
  EXPECT_EQ(f[1], (std::pair<Integer, unsigned>{3, 2}));
  EXPECT_EQ(f[2], (std::pair<Integer, unsigned>{5, 1}));
  const Integer big = Integer("1000000000000000003", 10) * Integer("1000000007", 10);
  const auto g = factor_integer(big * big);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].second, 2u);
  EXPECT_EQ(g[1].first, Integer("1000000000000000003", 10));
}

TEST(RationalSqrt, Examples) {
  EXPECT_EQ(rational_sqrt(q(49, 4)), q(7, 2));
  EXPECT_EQ(rational_sqrt(q(0)), q(0));
  EXPECT_FALSE(rational_sqrt(q(2)).has_value());
  EXPECT_FALSE(rational_sqrt(q(-4)).has_value());
  EXPECT_FALSE(rational_sqrt(q(9, 2)).has_value());
}

TEST(SquarefreeD, Validation) {
  EXPECT_THROW(SquarefreeD(0L), DomainError);
  EXPECT_THROW(SquarefreeD(1L), DomainError);
  EXPECT_THROW(SquarefreeD(12L), DomainError);
  EXPECT_EQ(SquarefreeD(-1L).to_long(), -1);
  EXPECT_FALSE(SquarefreeD(-3L).is_real());
  EXPECT_EQ(SquarefreeD::of_radicand(q(-12))->to_long(), -3);
  EXPECT_FALSE(SquarefreeD::of_radicand(q(25, 9)).has_value());
}

TEST(QuadElem, ConjugateExamples) {
  const SquarefreeD five(5L), m3(-3L);
  EXPECT_EQ(quad_conjugate(QuadElem(q(3), q(2), five)), QuadElem(q(3), q(-2), five));
  EXPECT_EQ(quad_conjugate(QuadElem(q(7), q(0), five)), QuadElem(q(7), q(0), five));
  EXPECT_EQ(quad_conjugate(QuadElem(q(0), q(1), m3)), QuadElem(q(0), q(-1), m3));
}

TEST(QuadElem, SqrtExamples) {
  const SquarefreeD five(5L);
  EXPECT_EQ(quad_sqrt(QuadElem(q(3, 2), q(1, 2), five)), QuadElem(q(1, 2), q(1, 2), five));
  EXPECT_EQ(quad_sqrt(QuadElem(q(4), q(0), five)), QuadElem(q(2), q(0), five));
  EXPECT_FALSE(quad_sqrt(QuadElem(q(1), q(1), five)).has_value());
  // sqrt(5) * sqrt(5)... 5 = (sqrt 5)^2 has a square root with a = 0
  EXPECT_EQ(quad_sqrt(QuadElem(q(5), q(0), five)), QuadElem(q(0), q(1), five));
  EXPECT_EQ(quad_sqrt(QuadElem(five)), QuadElem(five));
}

TEST(QuadElem, MixedFieldsRejected) {
  const QuadElem a(q(1), q(1), SquarefreeD(2L)), b(q(1), q(1), SquarefreeD(3L));
  EXPECT_THROW(a + b, DomainError);
  EXPECT_THROW(a * b, DomainError);
  EXPECT_THROW(a / QuadElem(SquarefreeD(2L)), DomainError);
}

TEST(QuadElem, ConjugationIsAutomorphism) {
  std::mt19937_64 rng(11);
  for (long dv : {-15L, -3L, -1L, 2L, 5L, 21L}) {
    const SquarefreeD d(dv);
    for (int i = 0; i < 40; ++i) {
      const QuadElem u(fixtures::random_rational(rng, 50, 9), fixtures::random_rational(rng, 50, 9), d);
      const QuadElem v(fixtures::random_rational(rng, 50, 9), fixtures::random_rational(rng, 50, 9), d);
      EXPECT_EQ(quad_conjugate(u * v), quad_conjugate(u) * quad_conjugate(v));
      EXPECT_EQ(quad_conjugate(u + v), quad_conjugate(u) + quad_conjugate(v));
      EXPECT_EQ(quad_conjugate(quad_conjugate(u)), u);
      EXPECT_TRUE((u * quad_conjugate(u)).is_rational());
      EXPECT_EQ((u * quad_conjugate(u)).a(), u.norm());
      if (!v.is_zero()) EXPECT_EQ((u / v) * v, u);
    }
  }
}

TEST(QuadElem, SqrtMatchesGridSearch) {
  // v^2 for small v recovered exactly; non-squares have no (x, y) in a small grid either
  std::mt19937_64 rng(3);
  for (long dv : {-7L, -2L, 3L, 13L}) {
    const SquarefreeD d(dv);
    for (int i = 0; i < 30; ++i) {
      const QuadElem v(fixtures::random_rational(rng, 20, 6), fixtures::random_rational(rng, 20, 6), d);
      const auto s = quad_sqrt(v * v);
      ASSERT_TRUE(s.has_value());
      EXPECT_EQ(*s * *s, v * v);
    }
    for (long a = -6; a <= 6; ++a) {
      for (long b = -6; b <= 6; ++b) {
        const QuadElem u(q(a), q(b), d);
        const auto s = quad_sqrt(u);
        if (s) {
          EXPECT_EQ(*s * *s, u);
          continue;
        }
        // a = x^2 + D y^2, b = 2xy over a grid of integers and halves
        for (long xn = -12; xn <= 12; ++xn)
          for (long yn = -12; yn <= 12; ++yn)
            for (long den : {1L, 2L}) {
              const Rational x = q(xn, den), y = q(yn, den);
              EXPECT_FALSE(x * x + Rational(dv) * y * y == q(a) && 2 * x * y == q(b));
            }
      }
    }
  }
}
