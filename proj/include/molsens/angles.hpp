#pragma once

#include "molsens/geometry.hpp"

namespace molsens {

struct PolarVector {
  double r = 0.0;
  double phi = 0.0;

  Vec2 to_cartesian() const { return r * unit_vector(phi); }
};

// Angle interval [lo, hi] with independently open endpoints. Width may reach
// 2*pi only for an interval that is open at both ends.
struct AngularInterval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = true;
  bool hi_open = true;

  double width() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
};

struct Decomposition {
  double alpha = 0.0;  // homothety ratio
  double theta = 0.0;  // rotation angle, (-pi, pi]
};

// Reduces `angle` into [center - pi, center + pi).
double reduce_angle(double angle, double center);

// phi in [branch_center - pi, branch_center + pi). Throws ZeroVector.
PolarVector to_polar(Vec2 v, double branch_center = 0.0);

Vec2 rotate(Vec2 v, double theta);

// H_alpha(R_theta(c_k1)) == delta * c_k1 + (1 - delta) * c_k2.
Decomposition decompose(Vec2 c_k1, Vec2 c_k2, double delta, Tolerance tol = {});

AngularInterval make_interval(double lo, double hi, bool lo_open = true, bool hi_open = true);

// Open endpoints are excluded unless omega is strictly inside by more than
// tol.eps; closed endpoints admit omega within tol.eps.
bool interval_contains(const AngularInterval& interval, double omega, Tolerance tol = {});

}  // namespace molsens
