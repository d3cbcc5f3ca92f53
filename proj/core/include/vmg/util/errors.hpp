#pragma once

#include <stdexcept>
#include <string>

namespace vmg {

// Error taxonomy used across the project. Every failure mode surfaced by an
// operation maps onto one of these so callers (including the CLI) can report
// a machine-readable category.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument values (out-of-range cells, infeasible sampler params, ...).
struct ParameterError : Error {
  using Error::Error;
};

// Malformed textual inputs (layout files, vocabulary files, sentences).
struct ParseError : Error {
  using Error::Error;
};

// Inputs outside an operation's mathematical domain (out-of-limit joints,
// degenerate boxes, points behind the camera).
struct DomainError : Error {
  using Error::Error;
};

// Inconsistent run configuration (bad split selection, missing keys).
struct ConfigError : Error {
  using Error::Error;
};

// Filesystem trouble.
struct IoError : Error {
  using Error::Error;
};

// Inverse kinematics failed to converge. Carries the best residual reached
// and, for waypoint sequences, the phase that failed.
struct UnreachableError : Error {
  UnreachableError(const std::string& msg, double residual, char phase = '?')
      : Error(msg), best_residual(residual), phase(phase) {}
  double best_residual;
  char phase;
};

}  // namespace vmg
