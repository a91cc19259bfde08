#pragma once

#include <cstddef>
#include <span>

#include "molsens/angles.hpp"
#include "molsens/cone.hpp"
#include "molsens/efficient_set.hpp"
#include "molsens/polytope.hpp"

namespace molsens {

// Symbolic description of the class of bundles sharing one efficient chain:
//
//   (<g1, .>, <g2, .>, <|g1| u(w_1), .>, ..., <|g1| u(w_{K-2}), .>)
//
// with every absolute angle w_i strictly inside `tolerance` and the joint
// angular spread of {g1, g2, w_1, ...} below pi.
struct SensitivityClass {
  Vec2 g1;  // c_0k1
  Vec2 g2;  // c_0k2
  std::size_t k1 = 1;
  std::size_t k2 = 2;
  double phi1 = 0.0;  // angle of g1, cone branch
  double phi2 = 0.0;  // angle of g2, cone branch
  double theta1 = 0.0;  // incoming edge angle at the chain start
  double theta2 = 0.0;  // outgoing edge angle at the chain end
  AngularInterval tolerance;  // ]theta1 - pi/2, theta2 - pi/2[
  Chain chain;
};

// Gradient angles omega whose argmax is the same vertex as `form`:
// ]theta1(j) - pi/2, theta2(j) - pi/2[, expressed around the angle of
// `form`. Throws ZeroVector, or EdgeOptimal when `form` is an edge normal.
AngularInterval mono_tolerance(const Polygon& polygon, Vec2 form, Tolerance tol = {});

SensitivityClass molp_sensitivity(const Polygon& polygon, const ObjectiveBundle& bundle,
                                  Tolerance tol = {});

// Largest window for a single extra gradient angle: the tolerance interval
// intersected with ]phi2 - pi, phi1 + pi[ so that the cone stays pointed.
AngularInterval single_gradient_window(const SensitivityClass& cls);

// Extra angles are absolute polar angles (radians). Throws
// AngleOutOfTolerance when an angle leaves the open tolerance interval, or
// ConeWidened when the angles together spread the cone to pi or more.
ObjectiveBundle sample_member(const SensitivityClass& cls, std::size_t K,
                              std::span<const double> thetas, Tolerance tol = {});

bool is_equivalent(const Polygon& polygon, const ObjectiveBundle& g, const ObjectiveBundle& h,
                   Tolerance tol = {});

// A bundle whose cone is not pointed has all of S efficient, which is
// never a boundary chain, so it is reported as outside the class.
bool in_class(const Polygon& polygon, const SensitivityClass& cls, const ObjectiveBundle& g,
              Tolerance tol = {});

}  // namespace molsens
