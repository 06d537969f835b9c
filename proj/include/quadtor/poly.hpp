#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "quadtor/arith.hpp"

namespace quadtor {

/// Dense univariate polynomial over Q; coefficient i multiplies X^i. No stored leading zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);
  UniPoly(std::initializer_list<long> coefficients);

  static UniPoly constant(const Rational& c);
  static UniPoly x_power(std::size_t n, const Rational& c = Rational(1));

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  UniPoly monic() const;
  UniPoly derivative() const;

  template <class Element>
  Element eval(const Element& x) const {
    Element acc = x * Rational(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc *= x;
      acc += *it;
    }
    return acc;
  }
  Rational eval(const Rational& x) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws DomainError when the divisor is zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& f, const UniPoly& g);

/// Monic gcd (zero when both inputs are zero).
UniPoly gcd(const UniPoly& f, const UniPoly& g);

/// Content-free integer polynomial c * f with c > 0 rational, as integer coefficients.
std::vector<Integer> primitive_integer_part(const UniPoly& f);

}  // namespace quadtor
