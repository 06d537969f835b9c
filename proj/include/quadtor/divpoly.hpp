#pragma once

// Division polynomials in X alone. For odd m the polynomial is psi_m; for even m it is the
// reduced psi_m / psi_2 = psi_m / (2Y), which omits the 2-torsion abscissae (those are roots of
// X^3 + AX + B). Both have integer-weighted recurrences with Y^2 eliminated by the curve.

#include <map>
#include <vector>

#include "quadtor/factor.hpp"
#include "quadtor/point.hpp"

namespace quadtor {

inline constexpr int kMaxDivisionIndex = 16;

/// Per-curve memo of division polynomials and their small factors over Q.
/// Not synchronized: use one instance per task.
class DivisionPolynomials {
 public:
  explicit DivisionPolynomials(CurveQ E);

  const CurveQ& curve() const noexcept { return E_; }

  /// Reduced division polynomial; throws DomainError unless 1 <= m <= 16.
  const UniPoly& psi(int m);

  /// X^3 + AX + B.
  const UniPoly& two_torsion_cubic() const noexcept { return cubic_; }

  /// small_factors(., 2) of the polynomial whose roots are abscissae of points of order m
  /// (the cubic for m == 2, psi(m) otherwise).
  const std::vector<UniPoly>& factors(int m);

 private:
  const UniPoly& psi_any(int m);

  CurveQ E_;
  UniPoly cubic_;
  UniPoly w_squared_;  // (4 (X^3 + AX + B))^2
  std::map<int, UniPoly> psi_;
  std::map<int, std::vector<UniPoly>> factors_;
};

UniPoly division_polynomial(const CurveQ& E, int m);

namespace detail {

std::vector<Rational> roots_from_factors(const std::vector<UniPoly>& factors, const RationalField&);
std::vector<QuadElem> roots_from_factors(const std::vector<UniPoly>& factors, const QuadraticField& K);

}  // namespace detail

/// Roots of f lying in Q (resp. Q(sqrt D)), each listed once, in canonical order.
std::vector<Rational> roots_in_field(const UniPoly& f, const RationalField& Q = {});
std::vector<QuadElem> roots_in_field(const UniPoly& f, const QuadraticField& K);

/// All points of exact order m (1 <= m <= 16) with coordinates in the field, sorted canonically.
template <class Field>
std::vector<Point<Field>> points_of_order(DivisionPolynomials& dp, int m, const Field& field) {
  using Element = typename Field::Element;
  if (m < 1 || m > kMaxDivisionIndex) throw DomainError("points_of_order: m must lie in 1..16");
  if (m == 1) return {Point<Field>::infinity(field)};
  // If P has order m then l*P has order m/l, so an empty lower level rules m out.
  for (int l = 2; l < m; ++l) {
    bool prime = true;
    for (int q = 2; q * q <= l; ++q) prime = prime && (l % q != 0);
    if (!prime || m % l != 0) continue;
    if (points_of_order(dp, m / l, field).empty()) return {};
  }
  const CurveQ& E = dp.curve();
  std::vector<Point<Field>> out;
  for (const Element& x : detail::roots_from_factors(dp.factors(m), field)) {
    const Element fx = E.rhs(x);
    const auto y = field.sqrt(fx);
    if (!y) continue;
    std::vector<Point<Field>> cands{Point<Field>(field, x, *y)};
    if (!is_zero(*y)) cands.emplace_back(field, x, -*y);
    for (auto& P : cands)
      if (point_order(E, P, m) == m) out.push_back(std::move(P));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return compare_points(a, b) < 0; });
  return out;
}

template <class Field>
std::vector<Point<Field>> points_of_order(const CurveQ& E, int m, const Field& field) {
  DivisionPolynomials dp(E);
  return points_of_order(dp, m, field);
}

}  // namespace quadtor
