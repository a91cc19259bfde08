#pragma once

#include <string>
#include <vector>

#include "independent.hpp"
#include "molsens/cone.hpp"
#include "molsens/polytope.hpp"

namespace molsens::testing {

inline std::string data_path(const std::string& name) { return std::string(MOLSENS_DATA_DIR) + "/" + name; }

inline std::vector<HalfPlane> example_constraints() {
  std::vector<HalfPlane> rows;
  for (const Row& r : example_rows()) rows.push_back({r.a1, r.a2, r.b});
  return rows;
}

inline Polygon example_polygon() { return enumerate_vertices(example_constraints(), true); }
inline ObjectiveBundle example_bundle() { return ObjectiveBundle(example_gradients()); }

inline Polygon unit_square() {
  const std::vector<HalfPlane> rows{{1, 0, 1}, {0, 1, 1}};
  return enumerate_vertices(rows, true);
}

inline Polygon triangle() {
  const std::vector<HalfPlane> rows{{1, 1, 1}};
  return enumerate_vertices(rows, true);
}

}  // namespace molsens::testing
