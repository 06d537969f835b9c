#pragma once

#include <array>
#include <optional>
#include <string>

#include "quadtor/arith.hpp"

namespace quadtor {

/// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with integer coefficients.
struct LongModel {
  std::array<Integer, 5> a;  // a1, a2, a3, a4, a6
  std::optional<std::string> label;

  const Integer& a1() const { return a[0]; }
  const Integer& a2() const { return a[1]; }
  const Integer& a3() const { return a[2]; }
  const Integer& a4() const { return a[3]; }
  const Integer& a6() const { return a[4]; }

  Integer b2() const;
  Integer b4() const;
  Integer b6() const;
  Integer b8() const;
  Integer c4() const;
  Integer c6() const;
  Integer discriminant() const;

  /// "[a1,a2,a3,a4,a6]"
  std::string coefficient_list() const;

  friend bool operator==(const LongModel&, const LongModel&) = default;
};

/// Parses "[a1,a2,a3,a4,a6]" (whitespace tolerated). Throws ParseError.
LongModel parse_long_model(const std::string& text);

/// Short model Y^2 = X^3 + A X + B over Q. Construction rejects singular data.
class CurveQ {
 public:
  /// Throws SingularCurveError when 4A^3 + 27B^2 == 0.
  CurveQ(Rational A, Rational B, std::optional<LongModel> origin = std::nullopt);

  const Rational& A() const noexcept { return A_; }
  const Rational& B() const noexcept { return B_; }
  const std::optional<LongModel>& origin() const noexcept { return origin_; }

  /// X^3 + A X + B evaluated in any field containing Q.
  template <class Element>
  Element rhs(const Element& x) const {
    Element r = x * x * x;
    r += A_ * x;
    r += B_;
    return r;
  }

  std::string to_string() const;

  friend bool operator==(const CurveQ& e, const CurveQ& f) { return e.A_ == f.A_ && e.B_ == f.B_; }

 private:
  Rational A_, B_;
  std::optional<LongModel> origin_;
};

/// -16 (4A^3 + 27B^2) for arbitrary A, B (zero for singular data).
Rational short_discriminant(const Rational& A, const Rational& B);

inline Rational discriminant(const CurveQ& E) { return short_discriminant(E.A(), E.B()); }

/// Affine change of variables between a long model and its short model:
/// X = 36x + 3b2, Y = 108(2y + a1 x + a3).
class CoordMap {
 public:
  explicit CoordMap(const LongModel& m) : a1_(m.a1()), a3_(m.a3()), b2_(m.b2()) {}

  template <class Element>
  std::pair<Element, Element> to_short(const Element& x, const Element& y) const {
    Element X = x * Rational(36);
    X += Rational(3 * b2_);
    Element Y = y * Rational(2);
    Y += x * Rational(a1_);
    Y += Rational(a3_);
    Y *= Rational(108);
    return {X, Y};
  }

  template <class Element>
  std::pair<Element, Element> to_long(const Element& X, const Element& Y) const {
    Element x = X - Rational(3 * b2_);
    x /= Rational(36);
    Element y = Y / Rational(108);
    y -= x * Rational(a1_);
    y -= Rational(a3_);
    y /= Rational(2);
    return {x, y};
  }

 private:
  Integer a1_, a3_, b2_;
};

struct ShortModel {
  CurveQ curve;
  CoordMap coord_map;
};

/// Y^2 = X^3 - 27 c4 X - 54 c6. Throws SingularCurveError for a singular long model.
ShortModel short_model_from_long(const LongModel& m);

}  // namespace quadtor
