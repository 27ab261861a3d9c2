#pragma once

#include <stdexcept>
#include <string>

namespace safeball {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Thrown by ball constructors when the input pair has infinite duality gap.
struct InfeasiblePair : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Radicand below the clamping band: indicates an upstream bug, not roundoff.
struct NegativeRadicand : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The pair fails the subdifferential linkage A^T u in dg(x) required by the
/// requested construction.
struct LinkageViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operation requires a specific problem family (e.g. least-squares loss).
struct WrongFamily : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolverFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace safeball
