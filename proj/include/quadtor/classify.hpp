#pragma once

#include <string>
#include <vector>

#include "quadtor/tables.hpp"
#include "quadtor/torsion.hpp"

namespace quadtor {

struct GrowthEntry {
  SquarefreeD d;
  TorsionStructure structure;

  friend bool operator==(const GrowthEntry&, const GrowthEntry&) = default;
};

/// Quadratic fields where E(K)_tors differs from the rational torsion, D ascending.
struct GrowthRecord {
  CurveQ curve;
  TorsionStructure baseline;
  std::vector<GrowthEntry> entries;
};

/// Runs torsion_K over every candidate field and keeps those with growth.
GrowthRecord growth_fields(DivisionPolynomials& dp, const TorsionStructure& baseline,
                           LevelPolicy policy = LevelPolicy::Restricted);
GrowthRecord growth_fields(const CurveQ& E, LevelPolicy policy = LevelPolicy::Restricted);

/// True when no quadratic field enlarges the torsion.
bool stable_torsion(const CurveQ& E, LevelPolicy policy = LevelPolicy::Restricted);

struct Order4Curve {
  CurveQ curve;
  PointQ point;  // image of (-beta, alpha beta), of order 4
};

/// Short model of Y^2 = X (X^2 + (alpha^2 + 2 beta) X + beta^2). Throws SingularCurveError when
/// alpha beta (alpha^2 + 4 beta) == 0.
Order4Curve order4_family(const Rational& alpha, const Rational& beta);

/// Curves singled out for C15 growth: quadratic growth to C15 from C3 or C5.
const std::vector<std::string>& c15_exemplar_labels();

}  // namespace quadtor
