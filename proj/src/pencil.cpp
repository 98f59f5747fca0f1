#include "quadspec/pencil.hpp"

#include <algorithm>
#include <cmath>

#include "quadspec/errors.hpp"
#include "quadspec/lapack.hpp"

namespace quadspec {
namespace {

void check_square(const SymBandMatrix& m, int dim, const char* name) {
  if (m.dim != dim) throw InvalidArgument(std::string("pencil: ") + name + " dimension mismatch");
}

// y = B x with B symmetric banded, x complex. Fixed traversal order keeps the
// result deterministic.
Eigen::VectorXcd band_mul(const SymBandMatrix& B, const Eigen::VectorXcd& x) {
  Eigen::VectorXcd y = Eigen::VectorXcd::Zero(B.dim);
  for (int j = 0; j < B.dim; ++j) {
    const int top = std::min(B.dim - 1, j + B.half_bandwidth);
    y[j] += B.at(j, j) * x[j];
    for (int i = j + 1; i <= top; ++i) {
      const double v = B.at(i, j);
      y[i] += v * x[j];
      y[j] += v * x[i];
    }
  }
  return y;
}

}  // namespace

QuadraticPencil make_pencil(const AssembledForms& forms) {
  return make_pencil(forms.A2, forms.A1, forms.A0);
}

QuadraticPencil make_pencil(SymBandMatrix A2, SymBandMatrix A1, SymBandMatrix A0) {
  if (A0.dim < 1) throw InvalidArgument("pencil: empty coefficient matrices");
  check_square(A1, A0.dim, "A1");
  check_square(A2, A0.dim, "A2");
  QuadraticPencil P;
  P.dim = A0.dim;
  P.A0 = std::move(A0);
  P.A1 = std::move(A1);
  P.A2 = std::move(A2);
  return P;
}

Eigen::MatrixXcd pencil_eval(const QuadraticPencil& P, std::complex<double> z) {
  Eigen::MatrixXcd Q = P.A2.to_dense().cast<std::complex<double>>();
  Q -= (2.0 * z) * P.A1.to_dense();
  Q += (z * z) * P.A0.to_dense();
  return Q;
}

CompanionPair companion(const QuadraticPencil& P) {
  lapack::cholesky_lower(P.A0.to_dense());  // positive definiteness gate
  const int N = P.dim;
  CompanionPair pair;
  pair.C = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  pair.D = Eigen::MatrixXd::Zero(2 * N, 2 * N);
  pair.C.topRightCorner(N, N).setIdentity();
  pair.C.bottomLeftCorner(N, N) = -P.A2.to_dense();
  pair.C.bottomRightCorner(N, N) = 2.0 * P.A1.to_dense();
  pair.D.topLeftCorner(N, N).setIdentity();
  pair.D.bottomRightCorner(N, N) = P.A0.to_dense();
  return pair;
}

std::vector<SecondOrderPoint> second_order_spectrum(const QuadraticPencil& P,
                                                    const SolverFlags& flags) {
  const int N = P.dim;
  lapack::EigenResult eig;
  if (flags.method == EigMethod::Generalized) {
    CompanionPair pair = companion(P);
    eig = lapack::generalized_eigen(std::move(pair.C), std::move(pair.D), flags.want_vectors);
  } else {
    const Eigen::MatrixXd L = lapack::cholesky_lower(P.A0.to_dense());
    // Similarity by S = blkdiag(I, L) turns (C, D) into the standard problem
    // M y = z y with M = [[0, L^-T], [-L^-1 A2, 2 L^-1 A1 L^-T]]; the first
    // block of y equals the first block of the companion eigenvector.
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(2 * N, 2 * N);
    M.topRightCorner(N, N) =
        L.transpose().triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(N, N));
    M.bottomLeftCorner(N, N) = -L.triangularView<Eigen::Lower>().solve(P.A2.to_dense());
    const Eigen::MatrixXd T = L.triangularView<Eigen::Lower>().solve(P.A1.to_dense());
    M.bottomRightCorner(N, N) = 2.0 * L.triangularView<Eigen::Lower>().solve(T.transpose());
    eig = lapack::standard_eigen(std::move(M), flags.balance, flags.want_vectors);
  }

  const double fro0 = P.A0.frobenius_norm();
  const double fro1 = P.A1.frobenius_norm();
  const double fro2 = P.A2.frobenius_norm();

  std::vector<SecondOrderPoint> points;
  points.reserve(2 * N);
  for (int k = 0; k < eig.values.size(); ++k) {
    SecondOrderPoint pt;
    pt.z = eig.values[k];
    if (flags.want_vectors) {
      pt.u = eig.vectors.col(k).head(N);
      const Eigen::VectorXcd qu = band_mul(P.A2, pt.u) - (2.0 * pt.z) * band_mul(P.A1, pt.u) +
                                  (pt.z * pt.z) * band_mul(P.A0, pt.u);
      const double scale = fro2 + 2.0 * std::abs(pt.z) * fro1 + std::norm(pt.z) * fro0;
      const double unorm = pt.u.norm();
      pt.residual = qu.norm() / (scale * unorm);
    }
    points.push_back(std::move(pt));
  }
  std::sort(points.begin(), points.end(), [](const SecondOrderPoint& a, const SecondOrderPoint& b) {
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    return a.z.imag() < b.z.imag();
  });
  return points;
}

double distance_bound(const QuadraticPencil& P, double x) {
  Eigen::MatrixXd Qx = P.A2.to_dense();
  Qx -= (2.0 * x) * P.A1.to_dense();
  Qx += (x * x) * P.A0.to_dense();
  const std::vector<double> evs = lapack::sym_generalized_values(std::move(Qx), P.A0.to_dense());
  return std::sqrt(std::max(0.0, evs.front()));
}

double orthonormalized_min_singular(const QuadraticPencil& P, double x) {
  const Eigen::MatrixXd L = lapack::cholesky_lower(P.A0.to_dense());
  Eigen::MatrixXd Qx = P.A2.to_dense();
  Qx -= (2.0 * x) * P.A1.to_dense();
  Qx += (x * x) * P.A0.to_dense();
  const Eigen::MatrixXd T = L.triangularView<Eigen::Lower>().solve(Qx);
  const Eigen::MatrixXd G = L.triangularView<Eigen::Lower>().solve(T.transpose());
  return lapack::min_singular_value_real(G);
}

double residual_scale(const QuadraticPencil& P, std::complex<double> z) {
  return P.A2.frobenius_norm() + 2.0 * std::abs(z) * P.A1.frobenius_norm() +
         std::norm(z) * P.A0.frobenius_norm();
}

double exact_residual(const QuadraticPencil& P, std::complex<double> z) {
  return lapack::min_singular_value(pencil_eval(P, z)) / residual_scale(P, z);
}

}  // namespace quadspec
