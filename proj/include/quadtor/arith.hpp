#pragma once

// Exact integer and rational arithmetic over Q. Integer and Rational are GMP
// values; every mpq operation leaves its result in lowest terms with a positive
// denominator, and make_rational() canonicalizes explicit fractions.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace quadtor {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "n" or "n/d" (optional sign). Throws DomainError on garbage.
Rational parse_rational(const std::string& text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// Total order on rationals, used for canonical tie-breaking.
inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

/// Prime factorization of |n| (n != 0) as (prime, exponent) pairs, primes ascending.
/// Trial division up to 10^6, then Miller-Rabin and Pollard-Brent rho on the cofactor.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

/// True iff no prime square divides n. Throws DomainError for n == 0.
bool is_squarefree(const Integer& n);

struct SquarefreeDecomposition {
  Integer d;   // squarefree, sign of q; d == 1 means Q(sqrt(q)) = Q
  Rational r;  // nonzero, positive
};

/// q = d * r^2 with d a squarefree integer. Throws DomainError for q == 0.
SquarefreeDecomposition squarefree_decompose(const Rational& q);

/// Nonnegative s with s^2 == q, or nullopt when q is not a square in Q.
std::optional<Rational> rational_sqrt(const Rational& q);

/// A squarefree integer other than 0 and 1: the D of Q(sqrt(D)).
class SquarefreeD {
 public:
  /// Validates squarefreeness by factoring. Throws DomainError on 0, 1 or non-squarefree input.
  explicit SquarefreeD(const Integer& value);
  explicit SquarefreeD(long value) : SquarefreeD(Integer(value)) {}

  /// Squarefree part of q, or nullopt when it is 1 (q is a rational square).
  static std::optional<SquarefreeD> of_radicand(const Rational& q);

  const Integer& value() const noexcept { return value_; }
  long to_long() const;  // throws DomainError if it does not fit
  bool is_real() const noexcept { return sgn(value_) > 0; }

  friend bool operator==(const SquarefreeD& a, const SquarefreeD& b) { return a.value_ == b.value_; }
  friend bool operator<(const SquarefreeD& a, const SquarefreeD& b) { return a.value_ < b.value_; }

 private:
  struct Trusted {};
  SquarefreeD(const Integer& value, Trusted) : value_(value) {}

  Integer value_;
};

std::string to_string(const SquarefreeD& d);

}  // namespace quadtor
