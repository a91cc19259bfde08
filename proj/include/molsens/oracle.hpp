#pragma once

#include <cstddef>
#include <vector>

#include "molsens/cone.hpp"
#include "molsens/polytope.hpp"
#include "molsens/solver.hpp"

// Brute-force ground truth for efficient sets. Verification only: nothing in
// the analysis pipeline calls into this header.
namespace molsens::oracle {

// lambda in the unit simplex: components in [0, 1], summing to 1.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> lambda, Tolerance tol = {});

  const std::vector<double>& lambda() const noexcept { return lambda_; }
  Vec2 combine(const ObjectiveBundle& bundle) const;

 private:
  std::vector<double> lambda_;
};

enum class Execution { Serial, Parallel };

// Bundles with more objectives sample only the simplex edges (every pair of
// objectives); the full lattice grows like grid^(K-1). The choice depends on
// K alone, so the grid at 2g contains the grid at g.
inline constexpr std::size_t kFullLatticeMaxObjectives = 3;

std::size_t lattice_size(std::size_t K, std::size_t grid);

// Row-major K-wide weights with spacing 1/grid.
std::vector<double> weight_grid(std::size_t K, std::size_t grid);

// Union of argmax faces over d = sum_k lambda_k c_0k, lambda on the grid,
// skipping d = 0, plus every edge whose outward normal is a nonnegative
// combination of the gradients. Sorted, duplicate-free. Both execution
// modes return the same set.
std::vector<Face> bruteforce_efficient(const Polygon& polygon, const ObjectiveBundle& bundle,
                                       std::size_t grid, Tolerance tol = {},
                                       Execution mode = Execution::Parallel);

std::vector<std::size_t> face_vertices(const std::vector<Face>& faces);

// Scans all vertices, `samples` points per edge and a 64x64 interior grid
// for a point that is no worse in every objective and better in one by more
// than tol.eps (objectives taken per unit gradient). Throws InfeasiblePoint.
bool is_dominated(const Polygon& polygon, const ObjectiveBundle& bundle, Vec2 p,
                  std::size_t samples, Tolerance tol = {});

}  // namespace molsens::oracle
