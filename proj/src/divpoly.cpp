#include "quadtor/divpoly.hpp"

#include <algorithm>

namespace quadtor {

DivisionPolynomials::DivisionPolynomials(CurveQ E)
    : E_(std::move(E)),
      cubic_(std::vector<Rational>{E_.B(), E_.A(), Rational(0), Rational(1)}) {
  const UniPoly w = cubic_ * Rational(4);
  w_squared_ = w * w;
}

const UniPoly& DivisionPolynomials::psi(int m) {
  if (m < 1 || m > kMaxDivisionIndex) throw DomainError("division polynomial index must lie in 1..16");
  return psi_any(m);
}

const UniPoly& DivisionPolynomials::psi_any(int m) {
  if (auto it = psi_.find(m); it != psi_.end()) return it->second;
  const Rational& A = E_.A();
  const Rational& B = E_.B();
  UniPoly f;
  switch (m) {
    case 0:
      break;
    case 1:
    case 2:
      f = UniPoly::constant(1);
      break;
    case 3:  // 3X^4 + 6AX^2 + 12BX - A^2
      f = UniPoly(std::vector<Rational>{Rational(-A * A), Rational(12 * B), Rational(6 * A), Rational(0), Rational(3)});
      break;
    case 4:  // 2 (X^6 + 5AX^4 + 20BX^3 - 5A^2X^2 - 4ABX - 8B^2 - A^3)
      f = UniPoly(std::vector<Rational>{Rational(-16 * B * B - 2 * A * A * A), Rational(-8 * A * B),
                                        Rational(-10 * A * A), Rational(40 * B), Rational(10 * A), Rational(0),
                                        Rational(2)});
      break;
    default: {
      const int k = m / 2;
      if (m % 2 == 1) {
        UniPoly lhs = psi_any(k + 2) * psi_any(k) * psi_any(k) * psi_any(k);
        UniPoly rhs = psi_any(k - 1) * psi_any(k + 1) * psi_any(k + 1) * psi_any(k + 1);
        if (k % 2 == 0)
          lhs = lhs * w_squared_;
        else
          rhs = rhs * w_squared_;
        f = lhs - rhs;
      } else {
        const UniPoly& a = psi_any(k - 1);
        const UniPoly& b = psi_any(k + 1);
        f = psi_any(k) * (psi_any(k + 2) * a * a - psi_any(k - 2) * b * b);
      }
    }
  }
  return psi_.emplace(m, std::move(f)).first->second;
}

const std::vector<UniPoly>& DivisionPolynomials::factors(int m) {
  if (auto it = factors_.find(m); it != factors_.end()) return it->second;
  const UniPoly& f = (m == 2) ? cubic_ : psi(m);
  std::vector<UniPoly> fs = f.degree() <= 0 ? std::vector<UniPoly>{} : small_factors(f, 2);
  return factors_.emplace(m, std::move(fs)).first->second;
}

UniPoly division_polynomial(const CurveQ& E, int m) {
  DivisionPolynomials dp(E);
  return dp.psi(m);
}

namespace detail {

std::vector<Rational> roots_from_factors(const std::vector<UniPoly>& factors, const RationalField&) {
  std::vector<Rational> out;
  for (const UniPoly& g : factors)
    if (g.degree() == 1) out.push_back(-g[0] / g[1]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<QuadElem> roots_from_factors(const std::vector<UniPoly>& factors, const QuadraticField& K) {
  std::vector<QuadElem> out;
  for (const UniPoly& g : factors) {
    if (g.degree() == 1) {
      out.push_back(K.embed(-g[0] / g[1]));
      continue;
    }
    if (g.degree() != 2) continue;
    const UniPoly m = g.monic();
    const Rational disc = m[1] * m[1] - 4 * m[0];
    const auto dec = squarefree_decompose(disc);
    if (dec.d != K.d().value()) continue;
    const Rational half_r = dec.r / 2;
    const Rational center = -m[1] / 2;
    out.emplace_back(center, half_r, K.d());
    out.emplace_back(center, Rational(-half_r), K.d());
  }
  std::sort(out.begin(), out.end(), [](const QuadElem& a, const QuadElem& b) { return compare(a, b) < 0; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

std::vector<Rational> roots_in_field(const UniPoly& f, const RationalField& Q) {
  if (f.degree() <= 0) return {};
  return detail::roots_from_factors(small_factors(f, 1), Q);
}

std::vector<QuadElem> roots_in_field(const UniPoly& f, const QuadraticField& K) {
  if (f.degree() <= 0) return {};
  return detail::roots_from_factors(small_factors(f, 2), K);
}

}  // namespace quadtor
