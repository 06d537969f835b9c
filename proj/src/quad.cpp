#include "quadtor/quad.hpp"

#include "quadtor/errors.hpp"

namespace quadtor {

void QuadElem::require_same_field(const QuadElem& o) const {
  if (!(d_ == o.d_))
    throw DomainError("mixed quadratic fields: sqrt(" + to_string(d_) + ") vs sqrt(" + to_string(o.d_) + ")");
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  require_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  require_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  require_same_field(o);
  Rational a = a_ * o.a_ + Rational(d_.value()) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  require_same_field(o);
  const Rational n = o.norm();
  if (sgn(n) == 0) throw DomainError("division by zero in Q(sqrt(" + to_string(d_) + "))");
  *this *= quad_conjugate(o);
  a_ /= n;
  b_ /= n;
  return *this;
}

QuadElem& QuadElem::operator/=(const Rational& q) {
  if (sgn(q) == 0) throw DomainError("division by zero");
  a_ /= q;
  b_ /= q;
  return *this;
}

std::optional<QuadElem> quad_sqrt(const QuadElem& u) {
  const Rational D(u.d().value());
  if (sgn(u.b()) == 0) {
    if (auto s = rational_sqrt(u.a())) return QuadElem(*s, Rational(0), u.d());
    if (auto t = rational_sqrt(u.a() / D)) return QuadElem(Rational(0), *t, u.d());
    return std::nullopt;
  }
  // (x + y sqrt D)^2 = a + b sqrt D  <=>  x^2 + D y^2 = a, 2xy = b; then x^2 = (a +- sqrt(N(u)))/2.
  const auto s = rational_sqrt(u.norm());
  if (!s) return std::nullopt;
  for (const Rational& x2 : {Rational((u.a() + *s) / 2), Rational((u.a() - *s) / 2)}) {
    const auto x = rational_sqrt(x2);
    if (!x || sgn(*x) == 0) continue;
    QuadElem v(*x, u.b() / (2 * *x), u.d());
    if (v * v == u) return v;
  }
  return std::nullopt;
}

std::string to_string(const QuadElem& u) {
  std::string out = to_string(u.a());
  const Rational& b = u.b();
  if (sgn(b) != 0) {
    out += sgn(b) < 0 ? " - " : " + ";
    out += to_string(Rational(abs(b)));
    out += "*sqrt(" + to_string(u.d()) + ")";
  }
  return out;
}

std::strong_ordering compare(const QuadElem& x, const QuadElem& y) {
  if (auto c = compare(x.a(), y.a()); c != 0) return c;
  return compare(x.b(), y.b());
}

}  // namespace quadtor
