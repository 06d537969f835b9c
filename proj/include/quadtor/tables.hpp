#pragma once

// Constant classification data: torsion groups over Q, torsion groups over quadratic fields of
// curves defined over Q, the growth table G -> {H}, the bounds k_G on the number of quadratic
// fields with growth, and tags explaining each excluded pair.

#include <string>
#include <vector>

#include "quadtor/arith.hpp"
#include "quadtor/structure.hpp"

namespace quadtor {

using GroupId = TorsionStructure;

/// The 15 torsion groups of elliptic curves over Q, ascending.
const std::vector<GroupId>& phi1();

/// The 22 torsion groups of rational elliptic curves over quadratic fields, ascending.
const std::vector<GroupId>& phi_q2();

bool in_phi1(const GroupId& g);
bool in_phi_q2(const GroupId& h);

/// Possible E(K)_tors for E(Q)_tors = G and K quadratic (G itself included). Throws DomainError
/// when G is not a torsion group over Q.
const std::vector<GroupId>& phi_q2_of(const GroupId& g);

/// Maximal number of quadratic fields in which torsion grows. Throws DomainError for G outside phi1.
int growth_bound(const GroupId& g);

enum class RuleTag {
  None,         // pair admitted
  NotSubgroup,  // G does not embed in H
  NoThreeFull,  // (i): full 3-torsion over Q(sqrt -3) forces rational 3-torsion
  NoEvenGrowth, // (ii): no 2-torsion appears unless it is already rational
  NoFourByTwo,  // (iii): C2 x C4 type growth needs a square condition that fails
  NoSixteen,    // (iv)
  NoNine,       // (v)
  FifteenOnly,  // (vi): C15 needs rational 3- or 5-torsion
  FullThreeAndEven,  // (i) and (ii)
  NonCyclic,    // exclusions for non-cyclic G
};

/// "rule (iv)", "G not a subgroup of H", ...
std::string describe(RuleTag tag);

struct Admissibility {
  bool allowed;
  RuleTag rule;
};

/// allowed is exactly H in phi_q2_of(G); rule explains a refusal (None otherwise).
/// Throws DomainError when G is outside phi1 or H outside phi_q2.
Admissibility allowed_pair(const GroupId& g, const GroupId& h);

/// False iff H needs roots of unity absent from Q(sqrt D): C3xC3 and C3xC6 need D = -3,
/// C4xC4 needs D = -1.
bool weil_constraint(const GroupId& h, const SquarefreeD& d);

}  // namespace quadtor
