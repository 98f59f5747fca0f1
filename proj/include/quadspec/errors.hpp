#pragma once

#include <stdexcept>

namespace quadspec {

// Rejected construction or call parameters (bad mesh spec, derivative order, ...).
struct InvalidArgument : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The assembled Gram matrix failed its positive definiteness check.
struct PositiveDefinitenessFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A factorization of the mass matrix failed inside a solver.
struct SingularMass : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An eigensolver backend failed to converge; the message carries the offending
// parameters (routine, dimension, info code).
struct ConvergenceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace quadspec
