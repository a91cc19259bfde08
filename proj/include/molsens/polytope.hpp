#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "molsens/geometry.hpp"

namespace molsens {

// a1*x1 + a2*x2 <= b
struct HalfPlane {
  double a1 = 0.0;
  double a2 = 0.0;
  double b = 0.0;

  Vec2 normal() const { return {a1, a2}; }
  friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

// Closed, bounded, strictly convex polygon. Vertices are stored
// counterclockwise starting from the vertex with minimal x2 (ties: minimal
// x1). All vertex indices in the public API are 1-based, v1 .. vn.
class Polygon {
 public:
  // Validates every invariant; throws GeometryError(InvalidPolygon).
  explicit Polygon(std::vector<Vec2> ccw_vertices, Tolerance tol = {});

  std::size_t size() const noexcept { return vertices_.size(); }
  const Vec2& vertex(std::size_t j) const;
  const std::vector<Vec2>& vertices() const noexcept { return vertices_; }

  // Index map M: alpha mod n, or n when alpha is a multiple of n.
  std::size_t wrap(long long alpha) const noexcept;

  Vec2 centroid() const;
  double signed_area() const;
  bool contains(Vec2 p, Tolerance tol = {}) const;

 private:
  std::vector<Vec2> vertices_;
};

// start = j0, count = number of successive vertices (1 = singleton).
struct Chain {
  std::size_t start = 1;
  std::size_t count = 1;

  friend bool operator==(const Chain&, const Chain&) = default;
};

struct Segment {
  std::size_t from = 0;
  std::size_t to = 0;
  Vec2 a;
  Vec2 b;
};

struct EdgeAngles {
  double theta1 = 0.0;  // polar angle of v^j - v^M(j-1)
  double theta2 = 0.0;  // polar angle of v^M(j+1) - v^j, in (theta1, theta1 + pi)
  double r1 = 0.0;
  double r2 = 0.0;
};

Polygon enumerate_vertices(std::span<const HalfPlane> constraints, bool include_nonnegativity,
                           Tolerance tol = {});

std::size_t wrap_index(const Polygon& polygon, long long alpha);

// theta1 lies in (-pi, pi]; theta2 = theta1 + exterior turn at v^j.
EdgeAngles edge_angles(const Polygon& polygon, std::size_t j);

// Same, with theta1 reduced into [branch_center - pi, branch_center + pi).
EdgeAngles edge_angles(const Polygon& polygon, std::size_t j, double branch_center);

// Exterior turning angle at v^j, in (0, pi).
double exterior_angle(const Polygon& polygon, std::size_t j);

void validate_chain(const Polygon& polygon, const Chain& chain);

// Vertex indices v^j0, v^M(j0+1), ... of the chain.
std::vector<std::size_t> chain_vertices(const Polygon& polygon, const Chain& chain);

std::vector<Segment> boundary_curve(const Polygon& polygon, const Chain& chain);

bool point_on_chain(const Polygon& polygon, const Chain& chain, Vec2 p, Tolerance tol = {});

// "S_1^5" style label.
std::string chain_name(const Chain& chain);

}  // namespace molsens
