#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "molsens/polytope.hpp"

namespace molsens {

// argmax of a linear form over the polygon: one vertex, or the edge
// (first, M(first + 1)) when both endpoints tie.
struct Face {
  enum class Kind { Vertex, Edge };

  Kind kind = Kind::Vertex;
  std::size_t first = 1;
  std::size_t second = 1;  // == first for a vertex

  static Face vertex(std::size_t j) { return {Kind::Vertex, j, j}; }
  static Face edge(std::size_t j, std::size_t next) { return {Kind::Edge, j, next}; }

  bool is_vertex() const { return kind == Kind::Vertex; }
  std::vector<std::size_t> vertices() const;

  friend bool operator==(const Face&, const Face&) = default;
  friend bool operator<(const Face& a, const Face& b) {
    if (a.first != b.first) return a.first < b.first;
    if (a.second != b.second) return a.second < b.second;
    return a.kind < b.kind;
  }
};

std::string to_string(const Face& face);

// The direction is normalised before comparison; two vertices tie when
// their values differ by at most eps * (1 + |max|). Throws ZeroDirection
// or NonAdjacentTie.
Face argmax_face(const Polygon& polygon, Vec2 d, Tolerance tol = {});

double argmax_value(const Polygon& polygon, Vec2 d);

}  // namespace molsens
