#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "molsens/cone.hpp"
#include "molsens/polytope.hpp"

namespace molsens {

// Generator of well-conditioned random problems for property tests, the
// acceptance suite and `verify --trials`. Polygons are cut out by lines
// tangent to a circle, so every exterior angle equals the gap between two
// consecutive tangent angles and is at least `min_exterior_deg`.
struct RandomInstanceOptions {
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 12;
  double min_exterior_deg = 10.0;
  double max_exterior_deg = 150.0;
  std::size_t max_redundant = 3;

  std::size_t min_objectives = 2;
  std::size_t max_objectives = 6;
  double max_cone_width_deg = 170.0;
  double min_norm = 0.5;
  double max_norm = 2.0;
};

struct RandomInstance {
  std::vector<HalfPlane> constraints;  // shuffled, includes redundant rows
  Polygon polygon;
  ObjectiveBundle bundle;
};

std::vector<HalfPlane> random_constraints(std::mt19937_64& rng, const RandomInstanceOptions& opt = {});

// Gradients with angular spread uniform in [0, max_cone_width_deg).
ObjectiveBundle random_bundle(std::mt19937_64& rng, const RandomInstanceOptions& opt = {});

RandomInstance random_instance(std::mt19937_64& rng, const RandomInstanceOptions& opt = {});

}  // namespace molsens
