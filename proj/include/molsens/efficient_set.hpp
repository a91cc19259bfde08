#pragma once

#include <cstddef>
#include <vector>

#include "molsens/cone.hpp"
#include "molsens/polytope.hpp"
#include "molsens/solver.hpp"

namespace molsens {

struct EfficientSet {
  Chain chain;
  std::vector<std::size_t> vs;  // efficient extreme points, chain order
  GradientCone cone;
  Face first_face;  // argmax along c_0k1
  Face last_face;   // argmax along c_0k2
};

// Sweeps counterclockwise from the argmax face of c_0k1 to that of c_0k2.
// An edge face contributes its CCW-earlier endpoint as chain start and its
// CCW-later endpoint as chain end.
EfficientSet efficient_chain(const Polygon& polygon, const ObjectiveBundle& bundle,
                             Tolerance tol = {});

// H = (<c_0k1, .>, <c_0k2, .>).
ObjectiveBundle reduce_to_tolp(const ObjectiveBundle& bundle, Tolerance tol = {});

}  // namespace molsens
