#include "molsens/classify.hpp"

#include <algorithm>

#include "molsens/efficient_set.hpp"

namespace molsens {

std::vector<ClassLabel> enumerate_ns(const Polygon& polygon) {
  const std::size_t n = polygon.size();
  std::vector<ClassLabel> labels;
  labels.reserve(n * n);
  for (std::size_t j0 = 1; j0 <= n; ++j0) {
    for (std::size_t j = 1; j <= n; ++j) labels.push_back({j0, j});
  }
  return labels;
}

ClassLabel classify(const Polygon& polygon, const ObjectiveBundle& bundle, Tolerance tol) {
  const Chain chain = efficient_chain(polygon, bundle, tol).chain;
  return {chain.start, chain.count};
}

Realization realize_label(const Polygon& polygon, const ClassLabel& label, Tolerance tol) {
  validate_chain(polygon, label.chain());
  Realization out{label, 0.0, std::nullopt};
  const auto s = static_cast<long long>(label.j0);

  if (label.j == 1) {
    const EdgeAngles ea = edge_angles(polygon, label.j0);
    const Vec2 d = unit_vector(0.5 * (ea.theta1 + ea.theta2) - 0.5 * kPi);
    out.witness.emplace(std::vector<Vec2>{d, d});
    return out;
  }

  const std::size_t e = polygon.wrap(s + static_cast<long long>(label.j) - 1);
  for (std::size_t l = 1; l + 1 < label.j; ++l) {
    out.required_turning += exterior_angle(polygon, polygon.wrap(s + static_cast<long long>(l)));
  }
  if (out.required_turning >= kPi - tol.eps) return out;

  const double edge_normal = edge_angles(polygon, label.j0).theta2 - 0.5 * kPi;
  const double margin = 0.25 * std::min({exterior_angle(polygon, label.j0), exterior_angle(polygon, e),
                                         kPi - out.required_turning});
  out.witness.emplace(std::vector<Vec2>{unit_vector(edge_normal - margin),
                                        unit_vector(edge_normal + out.required_turning + margin)});
  return out;
}

}  // namespace molsens
