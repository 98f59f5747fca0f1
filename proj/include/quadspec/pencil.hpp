#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "quadspec/assembly.hpp"

namespace quadspec {

enum class EigMethod {
  Generalized,  // QZ on the companion pair (C, D)
  Reduced,      // Cholesky reduction of D to a standard eigenproblem
};

struct SolverFlags {
  EigMethod method = EigMethod::Generalized;
  bool balance = true;       // Reduced path only; QZ applies its own scaling
  bool want_vectors = true;  // keep trial-space eigenvectors and residuals
};

// One computed second-order spectral point. residual is
// |Q(z) u| / ((|A2|_F + 2|z| |A1|_F + |z|^2 |A0|_F) |u|), an upper bound for
// the sigma_min form checked by exact_residual; it is 0 when eigenvectors
// were not requested.
struct SecondOrderPoint {
  std::complex<double> z;
  double residual = 0.0;
  Eigen::VectorXcd u;  // trial-space coefficients, empty when not requested
};

// Quadratic pencil Q(z) = A2 - 2 z A1 + z^2 A0. All coefficient matrices are
// real symmetric, so Q(conj z) = Q(z)^* and the root set is symmetric about
// the real axis.
struct QuadraticPencil {
  SymBandMatrix A0;
  SymBandMatrix A1;
  SymBandMatrix A2;
  int dim = 0;
};

QuadraticPencil make_pencil(const AssembledForms& forms);
QuadraticPencil make_pencil(SymBandMatrix A2, SymBandMatrix A1, SymBandMatrix A0);

// The N x N complex matrix A2 - 2 z A1 + z^2 A0.
Eigen::MatrixXcd pencil_eval(const QuadraticPencil& P, std::complex<double> z);

// Companion linearization: det Q(z) = 0 iff det(C - z D) = 0. D is invertible
// whenever A0 is positive definite, so no eigenvalues escape to infinity.
struct CompanionPair {
  Eigen::MatrixXd C;  // [[0, I], [-A2, 2 A1]]
  Eigen::MatrixXd D;  // blkdiag(I, A0)
};

// Throws SingularMass when the Cholesky check of A0 fails.
CompanionPair companion(const QuadraticPencil& P);

// All 2N finite eigenvalues of (C, D), sorted by (Re, Im). Generalized runs
// QZ on the pair directly; Reduced factors A0 = L L^T and solves the similar
// standard problem [[0, L^-T], [-L^-1 A2, 2 L^-1 A1 L^-T]], optionally
// balanced. The first block of a companion eigenvector is the trial-space
// vector u in both cases.
std::vector<SecondOrderPoint> second_order_spectrum(const QuadraticPencil& P,
                                                    const SolverFlags& flags = {});

// F(x): square root of the smallest eigenvalue of the symmetric definite pair
// (Q(x), A0). F(x) >= dist(x, Spec) when the trial space lies in the operator
// domain.
double distance_bound(const QuadraticPencil& P, double x);

// G(x) = F(x)^2 recomputed after Gram orthonormalization: the smallest
// singular value of L^-1 Q(x) L^-T with A0 = L L^T.
double orthonormalized_min_singular(const QuadraticPencil& P, double x);

// |A2|_F + 2|z| |A1|_F + |z|^2 |A0|_F, the normalization shared by the cheap
// and exact residuals.
double residual_scale(const QuadraticPencil& P, std::complex<double> z);

// sigma_min(Q(z)) / residual_scale(P, z). A full SVD per call; meant for spot
// checks, not for all 2N points.
double exact_residual(const QuadraticPencil& P, std::complex<double> z);

}  // namespace quadspec
