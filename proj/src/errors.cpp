#include "molsens/errors.hpp"

namespace molsens {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidConstraint: return "InvalidConstraint";
    case ErrorKind::EmptyRegion: return "EmptyRegion";
    case ErrorKind::UnboundedRegion: return "UnboundedRegion";
    case ErrorKind::DegenerateRegion: return "DegenerateRegion";
    case ErrorKind::InvalidPolygon: return "InvalidPolygon";
    case ErrorKind::InvalidChain: return "InvalidChain";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::ZeroGradient: return "ZeroGradient";
    case ErrorKind::TooFewObjectives: return "TooFewObjectives";
    case ErrorKind::WideCone: return "WideCone";
    case ErrorKind::ZeroDirection: return "ZeroDirection";
    case ErrorKind::NonAdjacentTie: return "NonAdjacentTie";
    case ErrorKind::DegenerateCombination: return "DegenerateCombination";
    case ErrorKind::EdgeOptimal: return "EdgeOptimal";
    case ErrorKind::AngleOutOfTolerance: return "AngleOutOfTolerance";
    case ErrorKind::ConeWidened: return "ConeWidened";
    case ErrorKind::InfeasiblePoint: return "InfeasiblePoint";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

GeometryError::GeometryError(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace molsens
