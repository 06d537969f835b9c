#pragma once

#include <vector>

#include "quadtor/poly.hpp"

namespace quadtor {

/// Every monic irreducible factor of f over Q with degree <= dmax (1 or 2), listed once per
/// multiplicity, sorted by (degree, coefficients). Works through a single good prime p > 100:
/// modular linear/quadratic factors are Hensel-lifted past twice the Mignotte bound, small
/// subsets are recombined, and each candidate is confirmed by exact division.
/// Throws DomainError for f == 0 or dmax outside {1, 2}.
std::vector<UniPoly> small_factors(const UniPoly& f, int dmax);

namespace detail {

/// Squarefree part f / gcd(f, f') made monic.
UniPoly squarefree_part(const UniPoly& f);

/// The prime used by small_factors for a content-free integer polynomial (exposed for tests).
unsigned long choose_factoring_prime(const std::vector<Integer>& f);

}  // namespace detail

}  // namespace quadtor
