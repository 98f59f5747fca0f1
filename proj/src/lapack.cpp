#include "quadspec/lapack.hpp"

#include <complex>
#include <string>

#include "quadspec/errors.hpp"

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

namespace quadspec::lapack {
namespace {

[[noreturn]] void backend_failure(const char* routine, int dim, lapack_int info) {
  throw ConvergenceFailure(std::string(routine) + " failed: dimension " + std::to_string(dim) +
                           ", info " + std::to_string(info));
}

// dgeev-style real Schur output packs a conjugate pair as two consecutive
// columns holding the real and imaginary parts of the first member.
Eigen::MatrixXcd unpack_real_eigenvectors(const Eigen::MatrixXd& vr, const Eigen::VectorXcd& values) {
  const int n = static_cast<int>(vr.rows());
  const int m = static_cast<int>(values.size());
  Eigen::MatrixXcd out(n, m);
  int j = 0;
  while (j < m) {
    if (values[j].imag() != 0.0 && j + 1 < m) {
      for (int i = 0; i < n; ++i) {
        out(i, j) = std::complex<double>(vr(i, j), vr(i, j + 1));
        out(i, j + 1) = std::complex<double>(vr(i, j), -vr(i, j + 1));
      }
      j += 2;
    } else {
      out.col(j) = vr.col(j).cast<std::complex<double>>();
      ++j;
    }
  }
  return out;
}

}  // namespace

std::vector<double> sym_generalized_values(Eigen::MatrixXd A, Eigen::MatrixXd B) {
  const int n = static_cast<int>(A.rows());
  std::vector<double> w(n);
  const lapack_int info = LAPACKE_dsygvd(LAPACK_COL_MAJOR, 1, 'N', 'L', n, A.data(), n,
                                         B.data(), n, w.data());
  if (info == 0) return w;
  if (info > n) {
    throw SingularMass("dsygvd: mass matrix not positive definite, minor order " +
                       std::to_string(info - n));
  }
  backend_failure("dsygvd", n, info);
}

Eigen::MatrixXd cholesky_lower(Eigen::MatrixXd A) {
  const int n = static_cast<int>(A.rows());
  const lapack_int info = LAPACKE_dpotrf(LAPACK_COL_MAJOR, 'L', n, A.data(), n);
  if (info > 0) {
    throw SingularMass("dpotrf: matrix not positive definite, minor order " + std::to_string(info));
  }
  if (info < 0) backend_failure("dpotrf", n, info);
  A.triangularView<Eigen::StrictlyUpper>().setZero();
  return A;
}

EigenResult generalized_eigen(Eigen::MatrixXd C, Eigen::MatrixXd D, bool want_vectors) {
  const int n = static_cast<int>(C.rows());
  Eigen::VectorXd alphar(n), alphai(n), beta(n);
  Eigen::MatrixXd vr(want_vectors ? n : 1, want_vectors ? n : 1);
  Eigen::MatrixXd vl(1, 1);
  const lapack_int info = LAPACKE_dggev(LAPACK_COL_MAJOR, 'N', want_vectors ? 'V' : 'N', n,
                                        C.data(), n, D.data(), n, alphar.data(), alphai.data(),
                                        beta.data(), vl.data(), 1, vr.data(),
                                        want_vectors ? n : 1);
  if (info != 0) backend_failure("dggev", n, info);
  EigenResult result;
  result.values.resize(n);
  for (int j = 0; j < n; ++j) {
    result.values[j] = std::complex<double>(alphar[j], alphai[j]) / beta[j];
  }
  if (want_vectors) {
    // The pair convention follows alphai, not the divided eigenvalue.
    Eigen::VectorXcd pairing(n);
    for (int j = 0; j < n; ++j) pairing[j] = std::complex<double>(alphar[j], alphai[j]);
    result.vectors = unpack_real_eigenvectors(vr, pairing);
  }
  return result;
}

EigenResult standard_eigen(Eigen::MatrixXd M, bool balance, bool want_vectors) {
  const int n = static_cast<int>(M.rows());
  Eigen::VectorXd wr(n), wi(n), scale(n), rconde(n), rcondv(n);
  Eigen::MatrixXd vr(want_vectors ? n : 1, want_vectors ? n : 1);
  Eigen::MatrixXd vl(1, 1);
  lapack_int ilo = 0, ihi = 0;
  double abnrm = 0.0;
  const lapack_int info = LAPACKE_dgeevx(LAPACK_COL_MAJOR, balance ? 'B' : 'N', 'N',
                                         want_vectors ? 'V' : 'N', 'N', n, M.data(), n,
                                         wr.data(), wi.data(), vl.data(), 1, vr.data(),
                                         want_vectors ? n : 1, &ilo, &ihi, scale.data(), &abnrm,
                                         rconde.data(), rcondv.data());
  if (info != 0) backend_failure("dgeevx", n, info);
  EigenResult result;
  result.values.resize(n);
  for (int j = 0; j < n; ++j) result.values[j] = std::complex<double>(wr[j], wi[j]);
  if (want_vectors) result.vectors = unpack_real_eigenvectors(vr, result.values);
  return result;
}

double min_singular_value(Eigen::MatrixXcd A) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  const int k = std::min(m, n);
  Eigen::VectorXd s(k);
  Eigen::VectorXd superb(std::max(1, k - 1));
  lapack_complex_double* u = nullptr;
  lapack_complex_double* vt = nullptr;
  const lapack_int info =
      LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'N', 'N', m, n,
                     reinterpret_cast<lapack_complex_double*>(A.data()), m, s.data(), u, 1, vt, 1,
                     superb.data());
  if (info != 0) backend_failure("zgesvd", m, info);
  return s[k - 1];
}

double min_singular_value_real(Eigen::MatrixXd A) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  const int k = std::min(m, n);
  Eigen::VectorXd s(k);
  Eigen::VectorXd superb(std::max(1, k - 1));
  double* u = nullptr;
  double* vt = nullptr;
  const lapack_int info = LAPACKE_dgesvd(LAPACK_COL_MAJOR, 'N', 'N', m, n, A.data(), m, s.data(),
                                         u, 1, vt, 1, superb.data());
  if (info != 0) backend_failure("dgesvd", m, info);
  return s[k - 1];
}

}  // namespace quadspec::lapack
