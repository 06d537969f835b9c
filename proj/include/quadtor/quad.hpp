#pragma once

// Arithmetic in Q(sqrt(D)) and the two field tags used by the group law:
// RationalField (elements are Rational) and QuadraticField (elements are QuadElem).

#include <optional>
#include <string>

#include "quadtor/arith.hpp"

namespace quadtor {

/// a + b*sqrt(d). Binary operations require equal d and throw DomainError otherwise.
class QuadElem {
 public:
  explicit QuadElem(SquarefreeD d) : d_(std::move(d)) {}
  QuadElem(Rational a, Rational b, SquarefreeD d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const SquarefreeD& d() const noexcept { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// a^2 - d b^2, the field norm.
  Rational norm() const { return a_ * a_ - Rational(d_.value()) * b_ * b_; }

  QuadElem operator-() const { return {-a_, -b_, d_}; }
  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);  // throws DomainError on division by zero

  QuadElem& operator+=(const Rational& q) { a_ += q; return *this; }
  QuadElem& operator-=(const Rational& q) { a_ -= q; return *this; }
  QuadElem& operator*=(const Rational& q) { a_ *= q; b_ *= q; return *this; }
  QuadElem& operator/=(const Rational& q);

  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }
  friend QuadElem operator+(QuadElem x, const Rational& q) { return x += q; }
  friend QuadElem operator+(const Rational& q, QuadElem x) { return x += q; }
  friend QuadElem operator-(QuadElem x, const Rational& q) { return x -= q; }
  friend QuadElem operator-(const Rational& q, const QuadElem& x) { return -x + q; }
  friend QuadElem operator*(QuadElem x, const Rational& q) { return x *= q; }
  friend QuadElem operator*(const Rational& q, QuadElem x) { return x *= q; }
  friend QuadElem operator/(QuadElem x, const Rational& q) { return x /= q; }

  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  void require_same_field(const QuadElem& o) const;

  Rational a_, b_;
  SquarefreeD d_;
};

/// The nontrivial automorphism a + b sqrt(d) -> a - b sqrt(d).
inline QuadElem quad_conjugate(const QuadElem& u) { return {u.a(), -u.b(), u.d()}; }

/// v with v^2 == u, or nullopt when u is not a square in Q(sqrt(d)).
std::optional<QuadElem> quad_sqrt(const QuadElem& u);

std::string to_string(const QuadElem& u);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const QuadElem& u) { return u.is_zero(); }

/// Field tag for Q.
struct RationalField {
  using Element = Rational;

  Element embed(const Rational& q) const { return q; }
  Element zero() const { return Rational(0); }
  std::optional<Element> sqrt(const Element& e) const { return rational_sqrt(e); }
  std::string name() const { return "Q"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Field tag for Q(sqrt(D)).
class QuadraticField {
 public:
  using Element = QuadElem;

  explicit QuadraticField(SquarefreeD d) : d_(std::move(d)) {}

  const SquarefreeD& d() const noexcept { return d_; }
  Element embed(const Rational& q) const { return {q, Rational(0), d_}; }
  Element zero() const { return QuadElem(d_); }
  Element sqrt_d() const { return {Rational(0), Rational(1), d_}; }
  std::optional<Element> sqrt(const Element& e) const { return quad_sqrt(e); }
  std::string name() const { return "Q(sqrt(" + to_string(d_) + "))"; }

  friend bool operator==(const QuadraticField& x, const QuadraticField& y) { return x.d_ == y.d_; }

 private:
  SquarefreeD d_;
};

/// Numeric lexicographic order of the (a, b) components; used for deterministic tie-breaks.
std::strong_ordering compare(const QuadElem& x, const QuadElem& y);

}  // namespace quadtor
