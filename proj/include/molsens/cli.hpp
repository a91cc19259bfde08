#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "molsens/cone.hpp"
#include "molsens/oracle.hpp"
#include "molsens/polytope.hpp"

namespace molsens {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,     // bad flags, unreadable or malformed files, write failures
  kExitGeometry = 3,  // any GeometryError
  kExitMismatch = 4,  // verify found a disagreement
};

// Pipeline against the brute-force oracle on one instance. Weakly efficient
// pieces (the chain end next to an edge-normal generator) are exempt from
// the non-dominance check.
struct VerifyOutcome {
  std::vector<std::size_t> pipeline_vs;  // sorted
  std::vector<std::size_t> oracle_vs;    // sorted
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

VerifyOutcome verify_instance(const Polygon& polygon, const ObjectiveBundle& bundle, std::size_t grid,
                              std::size_t samples, Tolerance tol = {},
                              oracle::Execution mode = oracle::Execution::Parallel);

// Arguments exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace molsens
