#include "quadspec/band_matrix.hpp"

#include <cmath>
#include <cstdio>

namespace quadspec {

Eigen::MatrixXd SymBandMatrix::to_dense() const {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int d = 0; d <= half_bandwidth && j + d < dim; ++d) {
      const double v = data[static_cast<size_t>(j) * (half_bandwidth + 1) + d];
      out(j + d, j) = v;
      out(j, j + d) = v;
    }
  }
  return out;
}

double SymBandMatrix::frobenius_norm() const {
  double diag = 0.0, off = 0.0;
  for (int j = 0; j < dim; ++j) {
    for (int d = 0; d <= half_bandwidth && j + d < dim; ++d) {
      const double v = data[static_cast<size_t>(j) * (half_bandwidth + 1) + d];
      if (d == 0) {
        diag += v * v;
      } else {
        off += v * v;
      }
    }
  }
  return std::sqrt(diag + 2.0 * off);
}

std::string SymBandMatrix::coordinate_dump() const {
  std::string out;
  char line[80];
  for (int i = 0; i < dim; ++i) {
    const int jmax = std::min(dim - 1, i + half_bandwidth);
    for (int j = std::max(0, i - half_bandwidth); j <= jmax; ++j) {
      std::snprintf(line, sizeof(line), "%d %d %.17g\n", i, j, at(i, j));
      out += line;
    }
  }
  return out;
}

}  // namespace quadspec
