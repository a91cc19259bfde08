#include "molsens/random_instance.hpp"

#include <algorithm>
#include <cmath>

#include "molsens/errors.hpp"

namespace molsens {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t uniform_count(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// n gaps summing to 2 pi, each inside [lo, hi]. Rejection over a uniform
// split of the slack.
std::vector<double> random_gaps(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  const double slack = kTwoPi - static_cast<double>(n) * lo;
  if (slack < 0.0 || static_cast<double>(n) * hi < kTwoPi) {
    throw GeometryError(ErrorKind::InvalidArgument, "no polygon with these exterior angle bounds");
  }
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> gaps(n);
  for (;;) {
    double total = 0.0;
    for (double& g : gaps) total += (g = expo(rng));
    bool ok = true;
    for (double& g : gaps) {
      g = lo + slack * g / total;
      ok = ok && g <= hi;
    }
    if (ok) return gaps;
  }
}

}  // namespace

std::vector<HalfPlane> random_constraints(std::mt19937_64& rng, const RandomInstanceOptions& opt) {
  const std::size_t n = uniform_count(rng, opt.min_vertices, opt.max_vertices);
  const std::vector<double> gaps = random_gaps(rng, n, radians(opt.min_exterior_deg), radians(opt.max_exterior_deg));
  const Vec2 center{uniform(rng, -5.0, 5.0), uniform(rng, -5.0, 5.0)};
  const double radius = uniform(rng, 1.0, 5.0);

  std::vector<HalfPlane> rows;
  std::vector<Vec2> corners;
  double t = uniform(rng, -kPi, kPi);
  for (double g : gaps) {
    const Vec2 u = unit_vector(t);
    const double scale = uniform(rng, 0.5, 3.0);
    rows.push_back({scale * u.x, scale * u.y, scale * (dot(u, center) + radius)});
    corners.push_back(center + (radius / std::cos(0.5 * g)) * unit_vector(t + 0.5 * g));
    t += g;
  }
  const std::size_t extra = uniform_count(rng, 0, opt.max_redundant);
  for (std::size_t i = 0; i < extra; ++i) {
    const Vec2 u = unit_vector(uniform(rng, -kPi, kPi));
    double support = dot(u, corners.front());
    for (const Vec2& c : corners) support = std::max(support, dot(u, c));
    rows.push_back({u.x, u.y, support + uniform(rng, 0.1, 2.0) * radius});
  }
  std::shuffle(rows.begin(), rows.end(), rng);
  return rows;
}

ObjectiveBundle random_bundle(std::mt19937_64& rng, const RandomInstanceOptions& opt) {
  const std::size_t K = uniform_count(rng, opt.min_objectives, opt.max_objectives);
  const double width = uniform(rng, 0.0, radians(opt.max_cone_width_deg));
  const double base = uniform(rng, -kPi, kPi);
  std::vector<double> angles{base, base + width};
  while (angles.size() < K) angles.push_back(base + uniform(rng, 0.0, width));
  std::shuffle(angles.begin(), angles.end(), rng);
  std::vector<Vec2> gradients;
  for (double a : angles) gradients.push_back(uniform(rng, opt.min_norm, opt.max_norm) * unit_vector(a));
  return ObjectiveBundle(std::move(gradients));
}

RandomInstance random_instance(std::mt19937_64& rng, const RandomInstanceOptions& opt) {
  std::vector<HalfPlane> rows = random_constraints(rng, opt);
  Polygon polygon = enumerate_vertices(rows, false);
  ObjectiveBundle bundle = random_bundle(rng, opt);
  return {std::move(rows), std::move(polygon), std::move(bundle)};
}

}  // namespace molsens
