#pragma once

#include <vector>

namespace quadspec {

// Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree <= 2*npts - 1.
struct QuadratureRule {
  int npts = 0;
  std::vector<double> points;
  std::vector<double> weights;
};

// The 8-point rule is tabulated (it is the workhorse for every element
// integral up to potential degree 4); other sizes are generated by Newton
// iteration on the Legendre polynomial and cached.
const QuadratureRule& gauss_legendre(int npts);

}  // namespace quadspec
