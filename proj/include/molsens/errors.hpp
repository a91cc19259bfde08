#pragma once

#include <stdexcept>
#include <string>

namespace molsens {

enum class ErrorKind {
  InvalidConstraint,
  EmptyRegion,
  UnboundedRegion,
  DegenerateRegion,
  InvalidPolygon,
  InvalidChain,
  ZeroVector,
  ZeroGradient,
  TooFewObjectives,
  WideCone,
  ZeroDirection,
  NonAdjacentTie,
  DegenerateCombination,
  EdgeOptimal,
  AngleOutOfTolerance,
  ConeWidened,
  InfeasiblePoint,
  InvalidArgument,
};

const char* to_string(ErrorKind kind) noexcept;

// Raised by every geometric operation. The message names the offending
// constraint or gradient (1-based) whenever one can be identified.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FileWriteError : public IoError {
 public:
  using IoError::IoError;
};

}  // namespace molsens
