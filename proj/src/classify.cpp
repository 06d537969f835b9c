#include "quadtor/classify.hpp"

namespace quadtor {

GrowthRecord growth_fields(DivisionPolynomials& dp, const TorsionStructure& baseline, LevelPolicy policy) {
  GrowthRecord rec{dp.curve(), baseline, {}};
  for (const SquarefreeD& d : candidate_fields(dp, baseline, policy)) {
    TorsionStructure h = torsion_K(dp, d, baseline, policy).structure;
    if (h != baseline) rec.entries.push_back({d, h});
  }
  return rec;
}

GrowthRecord growth_fields(const CurveQ& E, LevelPolicy policy) {
  DivisionPolynomials dp(E);
  const TorsionStructure g = torsion_Q(dp).structure;
  return growth_fields(dp, g, policy);
}

bool stable_torsion(const CurveQ& E, LevelPolicy policy) { return growth_fields(E, policy).entries.empty(); }

Order4Curve order4_family(const Rational& alpha, const Rational& beta) {
  // X^3 + a X^2 + b X with a = alpha^2 + 2 beta, b = beta^2
  const Rational a = alpha * alpha + 2 * beta;
  const Rational b = beta * beta;
  const Rational delta = a * a - 4 * b;  // discriminant of the quadratic factor
  if (sgn(b) == 0 || sgn(delta) == 0)
    throw SingularCurveError("alpha = " + to_string(alpha) + ", beta = " + to_string(beta) +
                             " gives 16 b^2 (a^2 - 4b) = 0");
  // X = x - a/3
  const Rational shift = a / 3;
  const Rational A = b - a * a / 3;
  const Rational B = 2 * a * a * a / 27 - a * b / 3;
  CurveQ E(A, B);
  PointQ P = make_point(E, Rational(-beta + shift), Rational(alpha * beta));
  return {std::move(E), std::move(P)};
}

const std::vector<std::string>& c15_exemplar_labels() {
  static const std::vector<std::string> labels = {"50a3", "50b1", "50b2", "450b4"};
  return labels;
}

}  // namespace quadtor
