#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "molsens/cone.hpp"
#include "molsens/polytope.hpp"

namespace molsens {

// Canonical name of an efficient chain: start vertex j0 and vertex count j.
struct ClassLabel {
  std::size_t j0 = 1;
  std::size_t j = 1;

  Chain chain() const { return {j0, j}; }
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

// All n^2 labels, j0-major.
std::vector<ClassLabel> enumerate_ns(const Polygon& polygon);

ClassLabel classify(const Polygon& polygon, const ObjectiveBundle& bundle, Tolerance tol = {});

struct Realization {
  ClassLabel label;
  // Counterclockwise turning the cone must cover: the exterior angles of
  // the chain's interior vertices. Realizable iff this is below pi.
  double required_turning = 0.0;
  std::optional<ObjectiveBundle> witness;  // 2-objective bundle, when realizable
};

// Builds a 2-objective bundle whose efficient chain is `label`, with
// generators just inside the normal cones of the two chain ends.
Realization realize_label(const Polygon& polygon, const ClassLabel& label, Tolerance tol = {});

}  // namespace molsens
