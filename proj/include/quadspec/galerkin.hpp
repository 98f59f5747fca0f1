#pragma once

#include <vector>

#include "quadspec/assembly.hpp"

namespace quadspec {

// The `count` smallest eigenvalues of the symmetric definite pair (A1, A0),
// ascending. Each is a Rayleigh-Ritz upper bound for the matching eigenvalue
// of the truncated operator, hence of the full operator.
std::vector<double> galerkin_eigenvalues(const AssembledForms& forms, int count);

}  // namespace quadspec
