#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "quadtor/classify.hpp"

using namespace quadtor;

namespace {

Rational q(long n, long d = 1) { return make_rational(Integer(n), Integer(d)); }

TorsionStructure S(int n1, int n2) { return {n1, n2}; }

}  // namespace

TEST(TorsionStructure, Basics) {
  EXPECT_THROW(TorsionStructure(2, 3), DomainError);
  EXPECT_THROW(TorsionStructure(0, 3), DomainError);
  EXPECT_EQ(S(2, 8).name(), "C2xC8");
  EXPECT_EQ(S(1, 15).name(), "C15");
  EXPECT_TRUE(S(2, 12).contains(S(1, 4)));
  EXPECT_TRUE(S(2, 12).contains(S(2, 6)));
  EXPECT_FALSE(S(1, 16).contains(S(2, 2)));
  EXPECT_EQ(S(2, 8).count_killed_by(4), 8);
  EXPECT_EQ(parse_structure("2,4"), S(2, 4));
  EXPECT_EQ(parse_structure("C3xC6"), S(3, 6));
  EXPECT_EQ(parse_structure("C3\xC3\x97" "C3"), S(3, 3));
  EXPECT_EQ(parse_structure("7"), S(1, 7));
  EXPECT_THROW(parse_structure("Cx"), DomainError);
  EXPECT_THROW(parse_structure("3,4"), DomainError);
}

TEST(TorsionQ, Examples) {
  EXPECT_EQ(torsion_Q(fixtures::short_model("11a1").curve).structure, S(1, 5));
  EXPECT_EQ(torsion_Q(fixtures::short_model("30a7").curve).structure, S(1, 2));
  EXPECT_EQ(torsion_Q(CurveQ(q(0), q(1))).structure, S(1, 6));
  EXPECT_EQ(torsion_Q(fixtures::short_model("210e2").curve).structure, S(2, 8));
  EXPECT_EQ(torsion_Q(fixtures::short_model("54b3").curve).structure, S(1, 9));
  EXPECT_EQ(torsion_Q(fixtures::short_model("90c3").curve).structure, S(1, 12));
}

TEST(TorsionQ, GeneratorsSpanTheGroup) {
  for (const char* label : {"210e2", "30a2", "24a1", "90c3", "11a1", "15a1"}) {
    const ShortModel sm = fixtures::short_model(label);
    const auto t = torsion_Q(sm.curve);
    ASSERT_EQ(static_cast<int>(t.elements.size()), t.structure.order()) << label;
    std::vector<PointQ> span;
    const PointQ O = PointQ::infinity();
    const PointQ P = t.generators.empty() ? O : t.generators[0];
    const PointQ Q = t.generators.size() > 1 ? t.generators[1] : O;
    for (int i = 0; i < t.structure.n2(); ++i)
      for (int j = 0; j < t.structure.n1(); ++j) {
        const PointQ R = add_points(sm.curve, scalar_mul(sm.curve, i, P), scalar_mul(sm.curve, j, Q));
        EXPECT_TRUE(on_curve(sm.curve, R));
        span.push_back(R);
      }
    std::sort(span.begin(), span.end(), [](const auto& a, const auto& b) { return compare_points(a, b) < 0; });
    EXPECT_EQ(span, t.elements) << label;
    if (!t.generators.empty()) EXPECT_EQ(point_order(sm.curve, P), t.structure.n2());
  }
}

TEST(TorsionQ, GeneratorChoiceIsCanonical) {
  const ShortModel sm = fixtures::short_model("11a1");
  const auto t = torsion_Q(sm.curve);
  ASSERT_EQ(t.generators.size(), 1u);
  EXPECT_EQ(to_string(t.generators[0]), "(168, -1188)");
}

TEST(TorsionK, Examples30a7) {
  const ShortModel sm = fixtures::short_model("30a7");
  EXPECT_EQ(torsion_K(sm.curve, SquarefreeD(-3L)).structure, S(1, 6));
  EXPECT_EQ(torsion_K(sm.curve, SquarefreeD(-5L)).structure, S(1, 4));
  EXPECT_EQ(torsion_K(sm.curve, SquarefreeD(-2L)).structure, S(1, 4));
  // full 2-torsion: the cubic's quadratic factor has discriminant 10 * square
  EXPECT_EQ(torsion_K(sm.curve, SquarefreeD(10L)).structure, S(2, 2));
  EXPECT_EQ(torsion_K(sm.curve, SquarefreeD(-10L)).structure, S(1, 2));
  EXPECT_EQ(torsion_K(sm.curve, SquarefreeD(7L)).structure, S(1, 2));
}

TEST(TorsionK, FifteenOver50a3) {
  const ShortModel sm = fixtures::short_model("50a3");
  const auto t = torsion_K(sm.curve, SquarefreeD(5L));
  EXPECT_EQ(t.structure, S(1, 15));
  EXPECT_EQ(point_order(sm.curve, t.generators.at(0)), 15);
}

TEST(TorsionK, PoliciesAgree) {
  for (const char* label : {"30a7", "14a1", "40a4", "19a1", "15a1", "210e2"}) {
    const ShortModel sm = fixtures::short_model(label);
    DivisionPolynomials dp(sm.curve);
    const auto G = torsion_Q(dp).structure;
    for (const SquarefreeD& d : candidate_fields(dp, G, LevelPolicy::Exhaustive)) {
      EXPECT_EQ(torsion_K(dp, d, G, LevelPolicy::Restricted).structure,
                torsion_K(dp, d, G, LevelPolicy::Exhaustive).structure)
          << label << " D=" << to_string(d);
    }
  }
}

TEST(TorsionK, ContainsRationalTorsion) {
  const ShortModel sm = fixtures::short_model("14a1");
  const auto tq = torsion_Q(sm.curve);
  for (long d : {-7L, -3L, 2L, 5L}) {
    const QuadraticField K{SquarefreeD(d)};
    const auto tk = torsion_K(sm.curve, K.d());
    EXPECT_EQ(tk.structure.order() % tq.structure.order(), 0);
    for (const auto& P : tq.elements)
      EXPECT_TRUE(std::binary_search(tk.elements.begin(), tk.elements.end(), promote(P, K),
                                     [](const auto& a, const auto& b) { return compare_points(a, b) < 0; }));
  }
}

TEST(TorsionK, RootsOfUnityConstraint) {
  const ShortModel e19 = fixtures::short_model("19a1");
  EXPECT_EQ(torsion_K(e19.curve, SquarefreeD(-3L)).structure, S(3, 3));
  const ShortModel e40 = fixtures::short_model("40a4");
  EXPECT_EQ(torsion_K(e40.curve, SquarefreeD(-1L)).structure, S(4, 4));
}

TEST(CandidateLevels, LazyInTheRationalTorsion) {
  EXPECT_EQ(candidate_levels(S(1, 1), LevelPolicy::Exhaustive), (std::vector<int>{2, 3, 5, 7}));
  EXPECT_EQ(candidate_levels(S(1, 1), LevelPolicy::Restricted), (std::vector<int>{3, 5, 7}));
  EXPECT_EQ(candidate_levels(S(1, 8), LevelPolicy::Exhaustive), (std::vector<int>{2, 3, 4, 5, 7, 8, 16}));
  EXPECT_EQ(candidate_levels(S(1, 7), LevelPolicy::Restricted), (std::vector<int>{}));
  EXPECT_EQ(candidate_levels(S(1, 3), LevelPolicy::Restricted), (std::vector<int>{3, 5}));
}

TEST(PsiMaps, RationalPointAndConjugateAntiInvariant) {
  const ShortModel sm = fixtures::short_model("30a7");
  const SquarefreeD d(-3L);
  const QuadraticField K(d);
  const CurveQ Ed = quadratic_twist(sm.curve, d);
  const auto tq = torsion_Q(sm.curve);
  for (const auto& P : tq.elements) {
    const auto [a, b] = psi_forward(sm.curve, d, promote(P, K));
    EXPECT_EQ(a, scalar_mul(sm.curve, 2, P));
    EXPECT_TRUE(b.is_infinity());
  }
  for (const auto& P : points_of_order(sm.curve, 3, K)) {
    ASSERT_EQ(conjugate(P), negate(P));
    const auto [a, b] = psi_forward(sm.curve, d, P);
    EXPECT_TRUE(a.is_infinity());
    EXPECT_TRUE(on_curve(Ed, b));
    EXPECT_FALSE(b.is_infinity());
  }
  const auto [o1, o2] = psi_forward(sm.curve, d, PointK::infinity(K));
  EXPECT_TRUE(o1.is_infinity() && o2.is_infinity());
}

TEST(PsiMaps, CompositionsAreDoubling) {
  const ShortModel sm = fixtures::short_model("14a1");
  for (long dv : {-3L, -7L}) {
    const SquarefreeD d(dv);
    const CurveQ Ed = quadratic_twist(sm.curve, d);
    const auto tk = torsion_K(sm.curve, d);
    for (const auto& P : tk.elements) {
      const auto [a, b] = psi_forward(sm.curve, d, P);
      EXPECT_TRUE(on_curve(Ed, b));
      EXPECT_EQ(psi_backward(sm.curve, d, a, b), scalar_mul(sm.curve, 2, P));
      if (a.is_infinity() && b.is_infinity()) EXPECT_TRUE(scalar_mul(sm.curve, 2, P).is_infinity());
    }
    const auto tq = torsion_Q(sm.curve);
    const auto tt = torsion_Q(Ed);
    for (const auto& P : tq.elements)
      for (const auto& R : tt.elements) {
        const auto [a, b] = psi_forward(sm.curve, d, psi_backward(sm.curve, d, P, R));
        EXPECT_EQ(a, scalar_mul(sm.curve, 2, P));
        EXPECT_EQ(b, scalar_mul(Ed, 2, R));
      }
  }
}

TEST(PsiMaps, BackwardExamples) {
  const ShortModel sm = fixtures::short_model("30a7");
  const SquarefreeD d(-5L);
  const QuadraticField K(d);
  const auto tq = torsion_Q(sm.curve);
  const PointQ P = tq.generators.at(0);
  EXPECT_EQ(psi_backward(sm.curve, d, P, PointQ::infinity()), promote(P, K));
  const auto tt = torsion_Q(quadratic_twist(sm.curve, d));
  for (const auto& R : tt.elements) EXPECT_EQ(psi_backward(sm.curve, d, PointQ::infinity(), R), from_twist(d, R));
  EXPECT_THROW(psi_forward(sm.curve, SquarefreeD(2L), promote(P, K)), DomainError);
}

TEST(OddPartCheck, Examples) {
  const ShortModel e30 = fixtures::short_model("30a7");
  const auto c = odd_part_check(e30.curve, SquarefreeD(-3L), 3);
  EXPECT_TRUE(c.holds());
  EXPECT_EQ(c.over_k, 3);
  EXPECT_EQ(c.over_q, 1);
  EXPECT_EQ(c.over_twist, 3);
  const ShortModel e11 = fixtures::short_model("11a1");
  for (long d : {-1L, 2L, 5L, -11L, 13L}) {
    const auto c5 = odd_part_check(e11.curve, SquarefreeD(d), 5);
    EXPECT_TRUE(c5.holds());
    EXPECT_EQ(c5.over_q, 5);
  }
  const auto c9 = odd_part_check(e30.curve, SquarefreeD(-2L), 9);
  EXPECT_TRUE(c9.holds());
  EXPECT_EQ(c9.over_k, 1);
  EXPECT_THROW(odd_part_check(e30.curve, SquarefreeD(-2L), 4), DomainError);
}

TEST(OddPartCheck, FullThreeTorsion) {
  const ShortModel e19 = fixtures::short_model("19a1");
  const auto c = odd_part_check(e19.curve, SquarefreeD(-3L), 3);
  EXPECT_EQ(c.over_k, 9);
  EXPECT_EQ(c.over_q * c.over_twist, 9);
}

TEST(TwistSurvey, Examples) {
  const auto s30 = twist_survey(fixtures::short_model("30a7").curve);
  EXPECT_TRUE(std::any_of(s30.begin(), s30.end(), [](const TwistEntry& t) {
    return t.d.value() == -3 && t.twist_torsion.order() % 3 == 0;
  }));
  EXPECT_TRUE(twist_survey(fixtures::short_model("26b1").curve).empty());
  for (const auto& t : twist_survey(CurveQ(q(1), q(0)), LevelPolicy::Exhaustive)) EXPECT_GT(t.twist_torsion.n2(), 2);
  // survey entries agree with a direct twist computation
  const auto sx = twist_survey(CurveQ(q(4), q(0)), LevelPolicy::Exhaustive);
  for (const auto& t : sx) EXPECT_EQ(torsion_Q(quadratic_twist(CurveQ(q(4), q(0)), t.d)).structure, t.twist_torsion);
}
