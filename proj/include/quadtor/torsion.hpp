#pragma once

// Torsion subgroups over Q and Q(sqrt D), the maps
//   Psi:     E(K) -> E(Q) x E_D(Q),  P      |-> (P + sigma P, phi(P - sigma P, 1/sqrt D))
//   Psi_bar: E(Q) x E_D(Q) -> E(K),  (P, R) |-> P + phi(R, sqrt D)
// (both compositions are multiplication by 2), and the odd-part count identity
// |E(K)[n]| = |E(Q)[n]| * |E_D(Q)[n]| for odd n.

#include <utility>
#include <vector>

#include "quadtor/divpoly.hpp"
#include "quadtor/structure.hpp"
#include "quadtor/twist.hpp"

namespace quadtor {

/// Which prime-power levels the searches visit.
///   Restricted: only levels where the growth table leaves room for a larger group.
///   Exhaustive: every prime power of a possible quadratic torsion order (2, 4, 8, 16, 3, 9, 5, 7).
/// Both are lazy: level p^(j+1) is searched only when points of order p^j exist.
enum class LevelPolicy { Restricted, Exhaustive };

template <class Field>
struct TorsionData {
  TorsionStructure structure;
  std::vector<Point<Field>> generators;  // empty, one (order n2) or two (orders n2, n1)
  std::vector<Point<Field>> elements;    // the whole group, canonically sorted
  Field field;
};

/// Throws InconsistencyError if the result is not a torsion group over Q.
TorsionData<RationalField> torsion_Q(DivisionPolynomials& dp);
TorsionData<RationalField> torsion_Q(const CurveQ& E);

/// G = E(Q)_tors is recomputed unless given. Throws InconsistencyError if the result is not
/// in the quadratic list, fails to contain G, or violates the roots-of-unity constraint.
TorsionData<QuadraticField> torsion_K(DivisionPolynomials& dp, const SquarefreeD& D, const TorsionStructure& G,
                                      LevelPolicy policy = LevelPolicy::Restricted);
TorsionData<QuadraticField> torsion_K(const CurveQ& E, const SquarefreeD& D,
                                      LevelPolicy policy = LevelPolicy::Restricted);

/// Prime powers whose division polynomials can reveal a field with growth over G: p^j with
/// j == 1 or p^(j-1) | exp(G), filtered by the growth table under Restricted.
std::vector<int> candidate_levels(const TorsionStructure& G, LevelPolicy policy);

/// Squarefree D (ascending) for which E(Q(sqrt D)) may exceed G: splitting fields of the
/// quadratic factors of the level polynomials and Q(sqrt(f(a))) for their rational roots a.
std::vector<SquarefreeD> candidate_fields(DivisionPolynomials& dp, const TorsionStructure& G,
                                          LevelPolicy policy = LevelPolicy::Restricted);

/// Psi; both components come back as rational points (first on E, second on the stored twist).
std::pair<PointQ, PointQ> psi_forward(const CurveQ& E, const SquarefreeD& D, const PointK& P);

/// Psi_bar.
PointK psi_backward(const CurveQ& E, const SquarefreeD& D, const PointQ& P, const PointQ& R);

struct OddPartCounts {
  long over_k = 0;      // |E(K)[n]|
  long over_q = 0;      // |E(Q)[n]|
  long over_twist = 0;  // |E_D(Q)[n]|
  bool holds() const noexcept { return over_k == over_q * over_twist; }
  explicit operator bool() const noexcept { return holds(); }
};

/// Counts of points killed by n in {3, 5, 7, 9, 15}; throws DomainError for other n.
OddPartCounts odd_part_check(DivisionPolynomials& dp, DivisionPolynomials& twist_dp, const SquarefreeD& D, int n);
OddPartCounts odd_part_check(const CurveQ& E, const SquarefreeD& D, int n);

struct TwistEntry {
  SquarefreeD d;
  TorsionStructure twist_torsion;
};

/// Twists E_D(Q) with a point of order > 2, D ascending.
std::vector<TwistEntry> twist_survey(DivisionPolynomials& dp, LevelPolicy policy = LevelPolicy::Restricted);
std::vector<TwistEntry> twist_survey(const CurveQ& E, LevelPolicy policy = LevelPolicy::Restricted);

}  // namespace quadtor
