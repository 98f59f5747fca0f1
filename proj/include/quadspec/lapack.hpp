#pragma once

#include <Eigen/Dense>
#include <vector>

namespace quadspec::lapack {

// Thin facade over the dense LAPACK backends. All matrices column-major.
// Backend failures surface as ConvergenceFailure; non-positive-definite mass
// matrices surface as SingularMass.

// Eigenvalues of the symmetric-definite pair A v = lambda B v, ascending.
std::vector<double> sym_generalized_values(Eigen::MatrixXd A, Eigen::MatrixXd B);

// Lower Cholesky factor of a symmetric positive definite matrix.
Eigen::MatrixXd cholesky_lower(Eigen::MatrixXd A);

struct EigenResult {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;  // right eigenvectors as columns; empty when not requested
};

// All eigenvalues of the generalized pair (C, D) via the QZ algorithm.
EigenResult generalized_eigen(Eigen::MatrixXd C, Eigen::MatrixXd D, bool want_vectors);

// All eigenvalues of a dense nonsymmetric matrix, with optional balancing
// (permutation plus diagonal scaling) before the Hessenberg reduction.
EigenResult standard_eigen(Eigen::MatrixXd M, bool balance, bool want_vectors);

// Smallest singular value.
double min_singular_value(Eigen::MatrixXcd A);
double min_singular_value_real(Eigen::MatrixXd A);

}  // namespace quadspec::lapack
