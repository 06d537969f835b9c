#pragma once

// Quadratic twists stored as short models Y^2 = X^3 + A D^2 X + B D^3. The model
// D Y^2 = X^3 + A X + B is identified with it through (x, y) -> (D x, D^2 y).

#include "quadtor/point.hpp"

namespace quadtor {

CurveQ quadratic_twist(const CurveQ& E, const SquarefreeD& D);

enum class TwistDirection { ToTwist, FromTwist };

/// The Q(sqrt(D))-isomorphism between E and its stored twist:
///   ToTwist:   (x, y) on E      -> (D x, D sqrt(D) y) on E_D   [phi(., 1/sqrt D), then rescale]
///   FromTwist: (X, Y) on E_D    -> (X / D, Y / (D sqrt D)) on E [inverse]
/// Throws DomainError when P is not over Q(sqrt(D)).
PointK twist_map(const SquarefreeD& D, const PointK& P, TwistDirection direction);

/// phi(R, sqrt D) for a rational point R of the stored twist: lands in E(Q(sqrt D)).
PointK from_twist(const SquarefreeD& D, const PointQ& R);

/// phi(R, 1/sqrt D) for R in E(K) with sigma R = -R: a rational point of the stored twist.
/// Throws DomainError if the image is not rational.
PointQ to_twist_rational(const SquarefreeD& D, const PointK& R);

}  // namespace quadtor
