#pragma once

// Points of a short Weierstrass curve over Q or Q(sqrt(D)) and the chord-tangent group law.
// Every point carries its field tag; arithmetic between points over different
// quadratic fields throws DomainError. Moving a rational point into Q(sqrt(D)) is explicit.

#include <compare>
#include <optional>
#include <string>
#include <utility>

#include "quadtor/curve.hpp"
#include "quadtor/errors.hpp"
#include "quadtor/quad.hpp"

namespace quadtor {

template <class Field>
class Point {
 public:
  using Element = typename Field::Element;

  static Point infinity(Field field = Field{}) { return Point(std::move(field)); }

  /// Affine point; the curve equation is not checked here (see make_point).
  Point(Field field, Element x, Element y) : field_(std::move(field)), xy_(std::in_place, std::move(x), std::move(y)) {}

  bool is_infinity() const noexcept { return !xy_.has_value(); }
  const Element& x() const { return xy_->first; }
  const Element& y() const { return xy_->second; }
  const Field& field() const noexcept { return field_; }

  friend bool operator==(const Point& p, const Point& q) {
    if (!(p.field_ == q.field_)) return false;
    if (p.is_infinity() || q.is_infinity()) return p.is_infinity() == q.is_infinity();
    return p.x() == q.x() && p.y() == q.y();
  }

 private:
  explicit Point(Field field) : field_(std::move(field)) {}

  Field field_;
  std::optional<std::pair<Element, Element>> xy_;
};

using PointQ = Point<RationalField>;
using PointK = Point<QuadraticField>;

template <class Field>
bool on_curve(const CurveQ& E, const Point<Field>& P) {
  if (P.is_infinity()) return true;
  return P.y() * P.y() == E.rhs(P.x());
}

/// Affine point checked against the curve equation. Throws DomainError when off the curve.
template <class Field>
Point<Field> make_point(const CurveQ& E, Field field, typename Field::Element x, typename Field::Element y) {
  Point<Field> P(std::move(field), std::move(x), std::move(y));
  if (!on_curve(E, P)) throw DomainError("point is not on " + E.to_string());
  return P;
}

inline PointQ make_point(const CurveQ& E, Rational x, Rational y) {
  return make_point(E, RationalField{}, std::move(x), std::move(y));
}

template <class Field>
Point<Field> negate(const Point<Field>& P) {
  if (P.is_infinity()) return P;
  return Point<Field>(P.field(), P.x(), -P.y());
}

template <class Field>
Point<Field> add_points(const CurveQ& E, const Point<Field>& P, const Point<Field>& Q) {
  using Element = typename Field::Element;
  if (!(P.field() == Q.field()))
    throw DomainError("add_points: points over " + P.field().name() + " and " + Q.field().name());
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;
  Element lambda = P.field().zero();
  if (P.x() == Q.x()) {
    if (is_zero(Element(P.y() + Q.y()))) return Point<Field>::infinity(P.field());
    // tangent: (3x^2 + A) / 2y
    Element num = P.x() * P.x();
    num *= Rational(3);
    num += E.A();
    Element den = P.y() * Rational(2);
    lambda = num / den;
  } else {
    lambda = (Q.y() - P.y()) / (Q.x() - P.x());
  }
  Element x3 = lambda * lambda;
  x3 -= P.x();
  x3 -= Q.x();
  Element y3 = lambda * (P.x() - x3);
  y3 -= P.y();
  return Point<Field>(P.field(), std::move(x3), std::move(y3));
}

template <class Field>
Point<Field> subtract_points(const CurveQ& E, const Point<Field>& P, const Point<Field>& Q) {
  return add_points(E, P, negate(Q));
}

/// k * P by double-and-add; negative k multiplies -P.
template <class Field>
Point<Field> scalar_mul(const CurveQ& E, long k, const Point<Field>& P) {
  Point<Field> base = k < 0 ? negate(P) : P;
  unsigned long n = k < 0 ? 0UL - static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
  Point<Field> acc = Point<Field>::infinity(P.field());
  while (n != 0) {
    if (n & 1UL) acc = add_points(E, acc, base);
    n >>= 1;
    if (n != 0) base = add_points(E, base, base);
  }
  return acc;
}

/// Default search bound for point_order: every torsion order over a quadratic field is at most 16.
inline constexpr int kDefaultOrderBound = 24;

/// Least n <= bound with n P = O, or nullopt.
template <class Field>
std::optional<int> point_order(const CurveQ& E, const Point<Field>& P, int bound = kDefaultOrderBound) {
  Point<Field> Q = P;
  for (int n = 1; n <= bound; ++n) {
    if (Q.is_infinity()) return n;
    Q = add_points(E, Q, P);
  }
  return std::nullopt;
}

/// Galois conjugate (x, y) -> (sigma x, sigma y).
inline PointK conjugate(const PointK& P) {
  if (P.is_infinity()) return P;
  return PointK(P.field(), quad_conjugate(P.x()), quad_conjugate(P.y()));
}

inline PointK promote(const PointQ& P, const QuadraticField& K) {
  if (P.is_infinity()) return PointK::infinity(K);
  return PointK(K, K.embed(P.x()), K.embed(P.y()));
}

/// The same point over Q when both coordinates are rational.
inline std::optional<PointQ> to_rational(const PointK& P) {
  if (P.is_infinity()) return PointQ::infinity();
  if (!P.x().is_rational() || !P.y().is_rational()) return std::nullopt;
  return PointQ(RationalField{}, P.x().a(), P.y().a());
}

/// Canonical total order on points: O first, then numeric lexicographic (x, y).
template <class Field>
std::strong_ordering compare_points(const Point<Field>& P, const Point<Field>& Q) {
  if (P.is_infinity() || Q.is_infinity()) return Q.is_infinity() <=> P.is_infinity();
  if (auto c = compare(P.x(), Q.x()); c != 0) return c;
  return compare(P.y(), Q.y());
}

template <class Field>
std::string to_string(const Point<Field>& P) {
  if (P.is_infinity()) return "O";
  return "(" + to_string(P.x()) + ", " + to_string(P.y()) + ")";
}

}  // namespace quadtor
