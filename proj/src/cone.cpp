#include "molsens/cone.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "molsens/angles.hpp"
#include "molsens/errors.hpp"

namespace molsens {

ObjectiveBundle::ObjectiveBundle(std::vector<Vec2> gradients) : gradients_(std::move(gradients)) {
  if (gradients_.size() < 2) {
    throw GeometryError(ErrorKind::TooFewObjectives,
                        "an objective bundle needs K >= 2 gradients, got " +
                            std::to_string(gradients_.size()));
  }
  for (std::size_t k = 0; k < gradients_.size(); ++k) {
    const double r = norm(gradients_[k]);
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw GeometryError(ErrorKind::ZeroGradient,
                          "gradient " + std::to_string(k + 1) + " is zero or not finite");
    }
  }
}

const Vec2& ObjectiveBundle::gradient(std::size_t k) const {
  if (k < 1 || k > gradients_.size()) {
    throw GeometryError(ErrorKind::InvalidArgument, "objective index " + std::to_string(k) +
                                                        " outside 1.." +
                                                        std::to_string(gradients_.size()));
  }
  return gradients_[k - 1];
}

GradientCone extreme_rays(const ObjectiveBundle& bundle, Tolerance tol) {
  const std::size_t K = bundle.size();
  std::vector<std::pair<double, std::size_t>> sorted;
  sorted.reserve(K);
  for (std::size_t k = 1; k <= K; ++k) {
    sorted.emplace_back(to_polar(bundle.gradient(k), kPi).phi, k);  // [0, 2pi)
  }
  std::sort(sorted.begin(), sorted.end());

  // The branch cut goes through the largest gap between gradient directions.
  double gap = -1.0;
  std::size_t before_gap = 0;
  for (std::size_t i = 0; i < K; ++i) {
    const double next = (i + 1 < K) ? sorted[i + 1].first : sorted[0].first + kTwoPi;
    if (next - sorted[i].first > gap) {
      gap = next - sorted[i].first;
      before_gap = i;
    }
  }
  const std::size_t after_gap = (before_gap + 1) % K;
  const double spread = kTwoPi - gap;
  if (spread >= kPi - tol.eps) {
    std::ostringstream os;
    os.precision(6);
    os << "gradients " << sorted[after_gap].second << " and " << sorted[before_gap].second
       << " span " << degrees(spread) << " degrees; the gradient cone is not pointed";
    throw GeometryError(ErrorKind::WideCone, os.str());
  }
  // Branch centred on the bisector, itself reported in [-pi, pi).
  const double center = reduce_angle(sorted[after_gap].first + 0.5 * spread, 0.0);

  std::vector<double> phi(K + 1);
  for (std::size_t k = 1; k <= K; ++k) phi[k] = reduce_angle(polar_angle(bundle.gradient(k)), center);

  GradientCone cone;
  if (K == 2) {
    const bool swap = phi[2] < phi[1] - tol.eps;
    cone.k1 = swap ? 2 : 1;
    cone.k2 = swap ? 1 : 2;
  } else {
    cone.k1 = cone.k2 = 1;
    for (std::size_t k = 2; k <= K; ++k) {
      if (phi[k] < phi[cone.k1] - tol.eps) cone.k1 = k;
      if (phi[k] > phi[cone.k2] + tol.eps) cone.k2 = k;
    }
  }
  cone.phi1 = phi[cone.k1];
  cone.phi2 = std::max(phi[cone.k2], cone.phi1);
  return cone;
}

std::vector<double> branch_angles(const ObjectiveBundle& bundle, const GradientCone& cone) {
  std::vector<double> out;
  out.reserve(bundle.size());
  for (const Vec2& g : bundle.gradients()) out.push_back(reduce_angle(polar_angle(g), cone.bisector()));
  return out;
}

bool contains_direction(const GradientCone& cone, Vec2 d, Tolerance tol) {
  const double w = to_polar(d, cone.bisector()).phi;
  return w >= cone.phi1 - tol.eps && w <= cone.phi2 + tol.eps;
}

}  // namespace molsens
