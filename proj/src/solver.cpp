#include "molsens/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "molsens/errors.hpp"

namespace molsens {

namespace {

Vec2 checked_direction(Vec2 d) {
  const double r = norm(d);
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw GeometryError(ErrorKind::ZeroDirection, "cannot maximise along the zero direction");
  }
  return d / r;
}

}  // namespace

std::vector<std::size_t> Face::vertices() const {
  if (is_vertex()) return {first};
  return {first, second};
}

std::string to_string(const Face& face) {
  if (face.is_vertex()) return "v" + std::to_string(face.first);
  return "[v" + std::to_string(face.first) + ", v" + std::to_string(face.second) + "]";
}

Face argmax_face(const Polygon& polygon, Vec2 d, Tolerance tol) {
  const Vec2 u = checked_direction(d);
  const std::size_t n = polygon.size();
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec2& v : polygon.vertices()) best = std::max(best, dot(u, v));

  const double slack = tol.eps * (1.0 + std::abs(best));
  std::vector<std::size_t> tied;
  for (std::size_t j = 1; j <= n; ++j) {
    if (dot(u, polygon.vertex(j)) >= best - slack) tied.push_back(j);
  }
  if (tied.size() == 1) return Face::vertex(tied[0]);
  if (tied.size() == 2) {
    const std::size_t a = tied[0];
    const std::size_t b = tied[1];
    if (polygon.wrap(static_cast<long long>(a) + 1) == b) return Face::edge(a, b);
    if (polygon.wrap(static_cast<long long>(b) + 1) == a) return Face::edge(b, a);
  }
  std::string which;
  for (std::size_t j : tied) which += " v" + std::to_string(j);
  throw GeometryError(ErrorKind::NonAdjacentTie,
                      "maximisers" + which + " are not a single vertex or edge; tolerance too large");
}

double argmax_value(const Polygon& polygon, Vec2 d) {
  checked_direction(d);
  double best = -std::numeric_limits<double>::infinity();
  for (const Vec2& v : polygon.vertices()) best = std::max(best, dot(d, v));
  return best;
}

}  // namespace molsens
