#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace quadspec {

// Symmetric real matrix in packed lower-band storage. Entry (i, j) with
// 0 <= i - j <= half_bandwidth lives at data[j * (half_bandwidth + 1) + i - j];
// entries outside the band are structurally zero. Symmetry is exact by
// construction since only one triangle is stored.
struct SymBandMatrix {
  int dim = 0;
  int half_bandwidth = 0;
  std::vector<double> data;

  SymBandMatrix() = default;
  SymBandMatrix(int dim_, int hbw)
      : dim(dim_), half_bandwidth(hbw), data(static_cast<size_t>(dim_) * (hbw + 1), 0.0) {}

  double& ref(int i, int j) {
    // Requires j <= i <= j + half_bandwidth.
    return data[static_cast<size_t>(j) * (half_bandwidth + 1) + (i - j)];
  }

  double at(int i, int j) const {
    if (i < j) std::swap(i, j);
    if (i - j > half_bandwidth) return 0.0;
    return data[static_cast<size_t>(j) * (half_bandwidth + 1) + (i - j)];
  }

  Eigen::MatrixXd to_dense() const;
  double frobenius_norm() const;

  // Plain-text coordinate dump: one "row col value" line per stored-band entry
  // of the full symmetric matrix, 17 significant digits, row-major order.
  std::string coordinate_dump() const;
};

}  // namespace quadspec
