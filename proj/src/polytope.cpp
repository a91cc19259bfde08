#include "molsens/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "molsens/errors.hpp"

namespace molsens {

namespace {

// Constraint rescaled so that |a| = 1; `label` names it in error messages.
struct UnitHalfPlane {
  Vec2 a;
  double b = 0.0;
  std::string label;
  HalfPlane raw;  // as given; intersections use it so integer data stay exact
};

std::string format_point(Vec2 p) {
  std::ostringstream os;
  os.precision(12);
  os << '(' << p.x << ", " << p.y << ')';
  return os.str();
}

std::vector<UnitHalfPlane> normalize(std::span<const HalfPlane> constraints, bool nonneg) {
  std::vector<UnitHalfPlane> out;
  out.reserve(constraints.size() + 2);
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const HalfPlane& h = constraints[i];
    if (!std::isfinite(h.a1) || !std::isfinite(h.a2) || !std::isfinite(h.b)) {
      throw GeometryError(ErrorKind::InvalidConstraint,
                          "constraint " + std::to_string(i + 1) + " has a non-finite coefficient");
    }
    const double len = norm(h.normal());
    if (len == 0.0) {
      throw GeometryError(ErrorKind::InvalidConstraint,
                          "constraint " + std::to_string(i + 1) + " has (a1, a2) = (0, 0)");
    }
    out.push_back({h.normal() / len, h.b / len, "constraint " + std::to_string(i + 1), h});
  }
  if (nonneg) {
    out.push_back({{-1.0, 0.0}, 0.0, "nonnegativity x1 >= 0", {-1.0, 0.0, 0.0}});
    out.push_back({{0.0, -1.0}, 0.0, "nonnegativity x2 >= 0", {0.0, -1.0, 0.0}});
  }
  return out;
}

// Fourier-Motzkin elimination of x2, then an interval test on x1. Every
// constraint is relaxed by `slack`.
bool feasible(const std::vector<const UnitHalfPlane*>& hs, double slack) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  auto bound_x1 = [&](double coef, double rhs) {
    if (std::abs(coef) <= 1e-15) return rhs >= -1e-15;
    if (coef > 0) {
      hi = std::min(hi, rhs / coef);
    } else {
      lo = std::max(lo, rhs / coef);
    }
    return true;
  };
  std::vector<const UnitHalfPlane*> upper, lower;
  for (const auto* h : hs) {
    if (h->a.y > 0) {
      upper.push_back(h);
    } else if (h->a.y < 0) {
      lower.push_back(h);
    } else if (!bound_x1(h->a.x, h->b + slack)) {
      return false;
    }
  }
  for (const auto* p : upper) {
    for (const auto* n : lower) {
      const double wp = -n->a.y;
      const double wn = p->a.y;
      const double coef = wp * p->a.x + wn * n->a.x;
      const double rhs = wp * (p->b + slack) + wn * (n->b + slack);
      if (!bound_x1(coef, rhs)) return false;
    }
  }
  return lo <= hi;
}

std::string infeasibility_witness(const std::vector<UnitHalfPlane>& hs, double slack) {
  const std::size_t m = hs.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!feasible({&hs[i], &hs[j]}, slack)) {
        return hs[i].label + " and " + hs[j].label + " have no common point";
      }
    }
  }
  // Helly: some three halfplanes are already infeasible.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        if (!feasible({&hs[i], &hs[j], &hs[k]}, slack)) {
          return hs[i].label + ", " + hs[j].label + " and " + hs[k].label +
                 " have no common point";
        }
      }
    }
  }
  return "the constraints have no common point";
}

// A nonempty polyhedron is unbounded iff all normals fit in a closed half
// circle, i.e. the largest angular gap between normals is >= pi.
std::optional<std::string> recession_witness(const std::vector<UnitHalfPlane>& hs, double eps) {
  std::vector<std::pair<double, std::size_t>> angles;
  angles.reserve(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    double a = polar_angle(hs[i].a);
    if (a < 0) a += kTwoPi;
    angles.emplace_back(a, i);
  }
  std::sort(angles.begin(), angles.end());
  double best_gap = -1.0;
  std::size_t best = 0;
  for (std::size_t i = 0; i < angles.size(); ++i) {
    const double next = (i + 1 < angles.size()) ? angles[i + 1].first : angles[0].first + kTwoPi;
    const double gap = next - angles[i].first;
    if (gap > best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  if (best_gap < kPi - eps) return std::nullopt;
  const std::size_t after = (best + 1) % angles.size();
  const Vec2 dir = unit_vector(angles[best].first + 0.5 * best_gap);
  std::ostringstream os;
  os.precision(6);
  os << "feasible region is unbounded along direction (" << dir.x << ", " << dir.y << "); "
     << "no constraint between " << hs[angles[best].second].label << " and "
     << hs[angles[after].second].label << " bounds it";
  return os.str();
}

std::vector<Vec2> convex_hull_ccw(std::vector<Vec2> pts, double eps) {
  std::sort(pts.begin(), pts.end(),
            [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  if (pts.size() < 3) return pts;
  auto left_turn = [eps](Vec2 a, Vec2 b, Vec2 c) {
    const Vec2 u = b - a;
    const Vec2 v = c - b;
    return cross(u, v) > eps * norm(u) * norm(v);
  };
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Vec2& p : pts) {
    while (k >= 2 && !left_turn(hull[k - 2], hull[k - 1], p)) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && !left_turn(hull[k - 2], hull[k - 1], pts[i])) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

std::size_t canonical_start(const std::vector<Vec2>& v, double eps) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double dy = v[i].y - v[best].y;
    if (dy < -eps || (std::abs(dy) <= eps && v[i].x < v[best].x)) best = i;
  }
  return best;
}

}  // namespace

Polygon::Polygon(std::vector<Vec2> ccw_vertices, Tolerance tol) : vertices_(std::move(ccw_vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    throw GeometryError(ErrorKind::InvalidPolygon, "a polygon needs at least 3 vertices");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(vertices_[i].x) || !std::isfinite(vertices_[i].y)) {
      throw GeometryError(ErrorKind::InvalidPolygon,
                          "vertex v" + std::to_string(i + 1) + " is not finite");
    }
    for (std::size_t k = i + 1; k < n; ++k) {
      if (distance(vertices_[i], vertices_[k]) <= tol.eps) {
        throw GeometryError(ErrorKind::InvalidPolygon, "vertices v" + std::to_string(i + 1) +
                                                           " and v" + std::to_string(k + 1) +
                                                           " coincide");
      }
    }
  }
  double turning = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    const Vec2 in = vertex(j) - vertex(wrap(static_cast<long long>(j) - 1));
    const Vec2 out = vertex(wrap(static_cast<long long>(j) + 1)) - vertex(j);
    if (cross(in, out) <= tol.eps * norm(in) * norm(out)) {
      throw GeometryError(ErrorKind::InvalidPolygon,
                          "vertex v" + std::to_string(j) + " is not a strict counterclockwise turn");
    }
    turning += std::atan2(cross(in, out), dot(in, out));
  }
  if (std::abs(turning - kTwoPi) > 1e-6) {
    throw GeometryError(ErrorKind::InvalidPolygon, "vertex ring winds more than once");
  }
  if (canonical_start(vertices_, tol.eps) != 0) {
    throw GeometryError(ErrorKind::InvalidPolygon,
                        "v1 must be the vertex with minimal x2 (ties: minimal x1)");
  }
}

const Vec2& Polygon::vertex(std::size_t j) const {
  if (j < 1 || j > vertices_.size()) {
    throw GeometryError(ErrorKind::InvalidArgument,
                        "vertex index " + std::to_string(j) + " outside 1.." +
                            std::to_string(vertices_.size()));
  }
  return vertices_[j - 1];
}

std::size_t Polygon::wrap(long long alpha) const noexcept {
  const auto n = static_cast<long long>(vertices_.size());
  const long long r = ((alpha % n) + n) % n;
  return static_cast<std::size_t>(r == 0 ? n : r);
}

double Polygon::signed_area() const {
  double twice = 0.0;
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) twice += cross(vertices_[i], vertices_[(i + 1) % n]);
  return 0.5 * twice;
}

Vec2 Polygon::centroid() const {
  Vec2 c;
  for (const Vec2& v : vertices_) c = c + v;
  return c / static_cast<double>(vertices_.size());
}

bool Polygon::contains(Vec2 p, Tolerance tol) const {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = vertices_[i];
    const Vec2 e = vertices_[(i + 1) % n] - a;
    // signed distance to the left of the edge
    if (cross(e, p - a) / norm(e) < -tol.eps) return false;
  }
  return true;
}

Polygon enumerate_vertices(std::span<const HalfPlane> constraints, bool include_nonnegativity,
                           Tolerance tol) {
  if (constraints.empty()) {
    throw GeometryError(ErrorKind::InvalidConstraint, "constraint list is empty");
  }
  const std::vector<UnitHalfPlane> hs = normalize(constraints, include_nonnegativity);

  std::vector<const UnitHalfPlane*> all;
  for (const auto& h : hs) all.push_back(&h);
  if (!feasible(all, tol.eps)) {
    throw GeometryError(ErrorKind::EmptyRegion, infeasibility_witness(hs, tol.eps));
  }
  if (auto why = recession_witness(hs, tol.eps)) {
    throw GeometryError(ErrorKind::UnboundedRegion, *why);
  }

  std::vector<Vec2> points;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      const Vec2 ai = hs[i].a;
      const Vec2 aj = hs[j].a;
      if (std::abs(cross(ai, aj)) <= 1e-12) continue;
      const HalfPlane& p = hs[i].raw;
      const HalfPlane& q = hs[j].raw;
      const double det = p.a1 * q.a2 - q.a1 * p.a2;
      const Vec2 x{(p.b * q.a2 - q.b * p.a2) / det, (p.a1 * q.b - q.a1 * p.b) / det};
      const double slack = tol.eps * std::max(1.0, norm(x));
      const bool ok = std::all_of(hs.begin(), hs.end(),
                                  [&](const UnitHalfPlane& h) { return dot(h.a, x) <= h.b + slack; });
      if (!ok) continue;
      const bool duplicate = std::any_of(points.begin(), points.end(), [&](Vec2 p) {
        return distance(p, x) <= tol.eps * std::max(1.0, norm(x));
      });
      if (!duplicate) points.push_back(x);
    }
  }

  std::vector<Vec2> hull = convex_hull_ccw(points, tol.eps);
  if (hull.size() < 3) {
    std::string what = "feasible region is ";
    what += hull.size() <= 1 ? "a single point" : "a segment";
    if (!hull.empty()) {
      what += " at " + format_point(hull.front());
      if (hull.size() == 2) what += " -- " + format_point(hull.back());
    }
    throw GeometryError(ErrorKind::DegenerateRegion, what);
  }
  std::rotate(hull.begin(), hull.begin() + static_cast<std::ptrdiff_t>(canonical_start(hull, tol.eps)),
              hull.end());
  return Polygon(std::move(hull), tol);
}

std::size_t wrap_index(const Polygon& polygon, long long alpha) {
  if (alpha < 0) {
    throw GeometryError(ErrorKind::InvalidArgument, "wrap_index needs alpha >= 0");
  }
  return polygon.wrap(alpha);
}

EdgeAngles edge_angles(const Polygon& polygon, std::size_t j) {
  const Vec2& v = polygon.vertex(j);
  const auto jj = static_cast<long long>(j);
  const Vec2 in = v - polygon.vertex(polygon.wrap(jj - 1));
  const Vec2 out = polygon.vertex(polygon.wrap(jj + 1)) - v;
  EdgeAngles ea;
  ea.theta1 = polar_angle(in);
  ea.theta2 = ea.theta1 + std::atan2(cross(in, out), dot(in, out));
  ea.r1 = norm(in);
  ea.r2 = norm(out);
  return ea;
}

EdgeAngles edge_angles(const Polygon& polygon, std::size_t j, double branch_center) {
  EdgeAngles ea = edge_angles(polygon, j);
  const double turn = ea.theta2 - ea.theta1;
  const double lo = branch_center - kPi;
  ea.theta1 = lo + std::fmod(std::fmod(ea.theta1 - lo, kTwoPi) + kTwoPi, kTwoPi);
  if (ea.theta1 >= branch_center + kPi) ea.theta1 -= kTwoPi;
  ea.theta2 = ea.theta1 + turn;
  return ea;
}

double exterior_angle(const Polygon& polygon, std::size_t j) {
  const EdgeAngles ea = edge_angles(polygon, j);
  return ea.theta2 - ea.theta1;
}

void validate_chain(const Polygon& polygon, const Chain& chain) {
  if (chain.start < 1 || chain.start > polygon.size() || chain.count < 1 ||
      chain.count > polygon.size()) {
    throw GeometryError(ErrorKind::InvalidChain,
                        "chain (" + std::to_string(chain.start) + ", " +
                            std::to_string(chain.count) + ") is invalid for a " +
                            std::to_string(polygon.size()) + "-vertex polygon");
  }
}

std::vector<std::size_t> chain_vertices(const Polygon& polygon, const Chain& chain) {
  validate_chain(polygon, chain);
  std::vector<std::size_t> out;
  out.reserve(chain.count);
  for (std::size_t l = 0; l < chain.count; ++l) {
    out.push_back(polygon.wrap(static_cast<long long>(chain.start + l)));
  }
  return out;
}

std::vector<Segment> boundary_curve(const Polygon& polygon, const Chain& chain) {
  const std::vector<std::size_t> idx = chain_vertices(polygon, chain);
  std::vector<Segment> segments;
  for (std::size_t l = 0; l + 1 < idx.size(); ++l) {
    segments.push_back({idx[l], idx[l + 1], polygon.vertex(idx[l]), polygon.vertex(idx[l + 1])});
  }
  return segments;
}

bool point_on_chain(const Polygon& polygon, const Chain& chain, Vec2 p, Tolerance tol) {
  const std::vector<Segment> segments = boundary_curve(polygon, chain);
  if (segments.empty()) return distance(p, polygon.vertex(chain.start)) <= tol.eps;
  return std::any_of(segments.begin(), segments.end(), [&](const Segment& s) {
    return distance_to_segment(p, s.a, s.b) <= tol.eps;
  });
}

std::string chain_name(const Chain& chain) {
  return "S_" + std::to_string(chain.start) + "^" + std::to_string(chain.count);
}

}  // namespace molsens
