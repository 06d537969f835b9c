#include "quadtor/twist.hpp"

namespace quadtor {

CurveQ quadratic_twist(const CurveQ& E, const SquarefreeD& D) {
  const Rational d(D.value());
  return CurveQ(E.A() * d * d, E.B() * d * d * d);
}

PointK twist_map(const SquarefreeD& D, const PointK& P, TwistDirection direction) {
  if (!(P.field().d() == D))
    throw DomainError("twist_map: point over " + P.field().name() + " but D = " + to_string(D));
  if (P.is_infinity()) return P;
  const Rational d(D.value());
  const QuadElem s = P.field().sqrt_d();
  if (direction == TwistDirection::ToTwist) return PointK(P.field(), P.x() * d, P.y() * s * d);
  // (D sqrt D)^{-1} = sqrt D / D^2
  return PointK(P.field(), P.x() / d, P.y() * s / Rational(d * d));
}

PointK from_twist(const SquarefreeD& D, const PointQ& R) {
  return twist_map(D, promote(R, QuadraticField(D)), TwistDirection::FromTwist);
}

PointQ to_twist_rational(const SquarefreeD& D, const PointK& R) {
  auto image = to_rational(twist_map(D, R, TwistDirection::ToTwist));
  if (!image) throw DomainError("to_twist_rational: image is not a rational point");
  return *image;
}

}  // namespace quadtor
