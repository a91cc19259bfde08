#include "molsens/angles.hpp"

#include <cmath>
#include <string>

#include "molsens/errors.hpp"

namespace molsens {

double reduce_angle(double angle, double center) {
  const double lo = center - kPi;
  double r = std::fmod(angle - lo, kTwoPi);
  if (r < 0) r += kTwoPi;
  double out = lo + r;
  if (out >= center + kPi) out -= kTwoPi;
  return out;
}

PolarVector to_polar(Vec2 v, double branch_center) {
  const double r = norm(v);
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw GeometryError(ErrorKind::ZeroVector, "vector has no polar angle");
  }
  return {r, reduce_angle(polar_angle(v), branch_center)};
}

Vec2 rotate(Vec2 v, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

Decomposition decompose(Vec2 c_k1, Vec2 c_k2, double delta, Tolerance tol) {
  const double r1 = norm(c_k1);
  if (!(r1 > 0.0)) {
    throw GeometryError(ErrorKind::ZeroVector, "first generator is the zero vector");
  }
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw GeometryError(ErrorKind::InvalidArgument,
                        "delta = " + std::to_string(delta) + " is outside [0, 1]");
  }
  const Vec2 d = delta * c_k1 + (1.0 - delta) * c_k2;
  const double rd = norm(d);
  if (rd <= tol.eps * std::max(r1, norm(c_k2))) {
    throw GeometryError(ErrorKind::DegenerateCombination,
                        "delta = " + std::to_string(delta) + " cancels opposite generators");
  }
  // atan2 keeps the sign that an arccos of the first component loses.
  const double theta = std::atan2(cross(c_k1, d), dot(c_k1, d));
  return {rd / r1, theta};
}

AngularInterval make_interval(double lo, double hi, bool lo_open, bool hi_open) {
  if (!(hi >= lo)) {
    throw GeometryError(ErrorKind::InvalidArgument, "interval upper end lies below its lower end");
  }
  const double width = hi - lo;
  if (width > kTwoPi + 1e-12 || (width >= kTwoPi && !(lo_open && hi_open))) {
    throw GeometryError(ErrorKind::InvalidArgument, "interval is wider than a full turn");
  }
  return {lo, hi, lo_open, hi_open};
}

bool interval_contains(const AngularInterval& interval, double omega, Tolerance tol) {
  const double w = reduce_angle(omega, interval.midpoint());
  const bool above = interval.lo_open ? (w > interval.lo + tol.eps) : (w >= interval.lo - tol.eps);
  const bool below = interval.hi_open ? (w < interval.hi - tol.eps) : (w <= interval.hi + tol.eps);
  return above && below;
}

}  // namespace molsens
