#include "molsens/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <string>

#include "molsens/errors.hpp"

namespace molsens::oracle {

namespace {

constexpr std::size_t kInteriorGrid = 64;

void compositions(std::size_t K, std::size_t grid, std::size_t pos, std::size_t left,
                  std::vector<std::size_t>& parts, std::vector<double>& out) {
  if (pos + 1 == K) {
    parts[pos] = left;
    for (std::size_t p : parts) out.push_back(static_cast<double>(p) / static_cast<double>(grid));
    return;
  }
  for (std::size_t i = 0; i <= left; ++i) {
    parts[pos] = i;
    compositions(K, grid, pos + 1, left - i, parts, out);
  }
}

std::optional<Face> face_at(const Polygon& polygon, const ObjectiveBundle& bundle,
                            const double* lambda, double scale, Tolerance tol) {
  Vec2 d;
  for (std::size_t k = 0; k < bundle.size(); ++k) d = d + lambda[k] * bundle.gradients()[k];
  if (norm(d) <= tol.eps * scale) return std::nullopt;
  return argmax_face(polygon, d, tol);
}

// n (unit) is a nonnegative combination of the unit gradients: parallel to
// one of them, or inside the sector of a pair spanning less than pi.
bool in_positive_hull(const std::vector<Vec2>& units, Vec2 n, double eps) {
  for (const Vec2& u : units) {
    if (std::abs(cross(u, n)) <= eps && dot(u, n) > 0.0) return true;
  }
  for (const Vec2& a : units) {
    for (const Vec2& b : units) {
      if (cross(a, b) > eps && cross(a, n) >= -eps && cross(n, b) >= -eps) return true;
    }
  }
  return false;
}

}  // namespace

WeightVector::WeightVector(std::vector<double> lambda, Tolerance tol) : lambda_(std::move(lambda)) {
  double sum = 0.0;
  for (double l : lambda_) {
    if (!(l >= 0.0 && l <= 1.0)) {
      throw GeometryError(ErrorKind::InvalidArgument, "weight outside [0, 1]");
    }
    sum += l;
  }
  if (std::abs(sum - 1.0) > tol.eps) {
    throw GeometryError(ErrorKind::InvalidArgument, "weights sum to " + std::to_string(sum));
  }
}

Vec2 WeightVector::combine(const ObjectiveBundle& bundle) const {
  if (lambda_.size() != bundle.size()) {
    throw GeometryError(ErrorKind::InvalidArgument, "weight vector and bundle sizes differ");
  }
  Vec2 d;
  for (std::size_t k = 0; k < lambda_.size(); ++k) d = d + lambda_[k] * bundle.gradients()[k];
  return d;
}

std::size_t lattice_size(std::size_t K, std::size_t grid) {
  // C(grid + K - 1, K - 1), saturating
  double count = 1.0;
  for (std::size_t i = 1; i < K; ++i) {
    count = count * static_cast<double>(grid + i) / static_cast<double>(i);
    if (count > 1e18) return static_cast<std::size_t>(-1);
  }
  return static_cast<std::size_t>(std::llround(count));
}

std::vector<double> weight_grid(std::size_t K, std::size_t grid) {
  if (K < 1 || grid < 1) {
    throw GeometryError(ErrorKind::InvalidArgument, "weight grid needs K >= 1 and grid >= 1");
  }
  std::vector<double> out;
  if (K <= kFullLatticeMaxObjectives) {
    std::vector<std::size_t> parts(K);
    out.reserve(lattice_size(K, grid) * K);
    compositions(K, grid, 0, grid, parts, out);
    return out;
  }
  for (std::size_t a = 0; a < K; ++a) {
    for (std::size_t b = a + 1; b < K; ++b) {
      for (std::size_t i = 0; i <= grid; ++i) {
        const std::size_t row = out.size();
        out.resize(row + K, 0.0);
        out[row + a] = static_cast<double>(i) / static_cast<double>(grid);
        out[row + b] = static_cast<double>(grid - i) / static_cast<double>(grid);
      }
    }
  }
  return out;
}

std::vector<Face> bruteforce_efficient(const Polygon& polygon, const ObjectiveBundle& bundle,
                                       std::size_t grid, Tolerance tol, Execution mode) {
  if (grid < 2) {
    throw GeometryError(ErrorKind::InvalidArgument, "oracle grid must be >= 2");
  }
  const std::size_t K = bundle.size();
  const std::vector<double> weights = weight_grid(K, grid);
  const auto rows = static_cast<long long>(weights.size() / K);
  double scale = 0.0;
  for (const Vec2& g : bundle.gradients()) scale = std::max(scale, norm(g));

  std::vector<std::optional<Face>> found(static_cast<std::size_t>(rows));
  if (mode == Execution::Parallel) {
    // Exceptions must not cross the parallel region; keep the first one.
    std::exception_ptr error;
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < rows; ++i) {
      try {
        found[static_cast<std::size_t>(i)] =
            face_at(polygon, bundle, weights.data() + static_cast<std::size_t>(i) * K, scale, tol);
      } catch (...) {
#pragma omp critical(molsens_oracle_error)
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  } else {
    for (long long i = 0; i < rows; ++i) {
      found[static_cast<std::size_t>(i)] =
          face_at(polygon, bundle, weights.data() + static_cast<std::size_t>(i) * K, scale, tol);
    }
  }

  std::vector<Face> faces;
  for (const auto& f : found) {
    if (f) faces.push_back(*f);
  }
  // Edges are maximal only for directions exactly normal to them, which a
  // grid rarely hits; test each outward normal directly.
  std::vector<Vec2> units;
  for (const Vec2& g : bundle.gradients()) units.push_back(g / norm(g));
  for (std::size_t j = 1; j <= polygon.size(); ++j) {
    const std::size_t next = polygon.wrap(static_cast<long long>(j) + 1);
    const Vec2 e = polygon.vertex(next) - polygon.vertex(j);
    if (in_positive_hull(units, Vec2{e.y, -e.x} / norm(e), tol.eps)) faces.push_back(Face::edge(j, next));
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  return faces;
}

std::vector<std::size_t> face_vertices(const std::vector<Face>& faces) {
  std::vector<std::size_t> out;
  for (const Face& f : faces) {
    for (std::size_t j : f.vertices()) out.push_back(j);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_dominated(const Polygon& polygon, const ObjectiveBundle& bundle, Vec2 p,
                  std::size_t samples, Tolerance tol) {
  if (!polygon.contains(p, tol)) {
    throw GeometryError(ErrorKind::InfeasiblePoint,
                        "point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                            ") lies outside the polygon");
  }
  std::vector<Vec2> units;
  for (const Vec2& g : bundle.gradients()) units.push_back(g / norm(g));
  const double roundoff = 1e-12 * (1.0 + norm(p));

  auto dominates = [&](Vec2 y) {
    bool strict = false;
    for (const Vec2& u : units) {
      const double diff = dot(u, y - p);
      if (diff < -roundoff) return false;
      if (diff > tol.eps) strict = true;
    }
    return strict;
  };

  const std::size_t n = polygon.size();
  for (std::size_t j = 1; j <= n; ++j) {
    const Vec2 a = polygon.vertex(j);
    const Vec2 b = polygon.vertex(polygon.wrap(static_cast<long long>(j) + 1));
    if (dominates(a)) return true;
    for (std::size_t i = 1; i <= samples; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(samples + 1);
      if (dominates(a + t * (b - a))) return true;
    }
  }

  Vec2 lo = polygon.vertex(1);
  Vec2 hi = lo;
  for (const Vec2& v : polygon.vertices()) {
    lo = {std::min(lo.x, v.x), std::min(lo.y, v.y)};
    hi = {std::max(hi.x, v.x), std::max(hi.y, v.y)};
  }
  for (std::size_t ix = 0; ix < kInteriorGrid; ++ix) {
    for (std::size_t iy = 0; iy < kInteriorGrid; ++iy) {
      const Vec2 y{lo.x + (hi.x - lo.x) * (static_cast<double>(ix) + 0.5) / kInteriorGrid,
                   lo.y + (hi.y - lo.y) * (static_cast<double>(iy) + 0.5) / kInteriorGrid};
      if (polygon.contains(y, Tolerance{0.0}) && dominates(y)) return true;
    }
  }
  return false;
}

}  // namespace molsens::oracle
