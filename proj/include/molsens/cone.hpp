#pragma once

#include <cstddef>
#include <vector>

#include "molsens/geometry.hpp"

namespace molsens {

// The gradients c_01 .. c_0K of F0 = (<c_01, .>, ..., <c_0K, .>), K >= 2.
class ObjectiveBundle {
 public:
  // Throws TooFewObjectives or ZeroGradient (naming the 1-based index).
  explicit ObjectiveBundle(std::vector<Vec2> gradients);

  std::size_t size() const noexcept { return gradients_.size(); }
  // 1-based, matching objective labels f_1 .. f_K.
  const Vec2& gradient(std::size_t k) const;
  const std::vector<Vec2>& gradients() const noexcept { return gradients_; }

 private:
  std::vector<Vec2> gradients_;
};

// Extreme rays of the gradient cone. Angles live in the analysis branch
// centred on the cone bisector, so phi1 <= every gradient angle <= phi2.
struct GradientCone {
  std::size_t k1 = 1;
  std::size_t k2 = 2;
  double phi1 = 0.0;
  double phi2 = 0.0;

  double width() const { return phi2 - phi1; }
  double bisector() const { return 0.5 * (phi1 + phi2); }
};

// Throws ZeroGradient, or WideCone when no branch brings the spread below pi.
GradientCone extreme_rays(const ObjectiveBundle& bundle, Tolerance tol = {});

// Every gradient angle expressed in the branch of `cone`.
std::vector<double> branch_angles(const ObjectiveBundle& bundle, const GradientCone& cone);

bool contains_direction(const GradientCone& cone, Vec2 d, Tolerance tol = {});

}  // namespace molsens
