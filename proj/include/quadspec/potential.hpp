#pragma once

#include <string>
#include <vector>

#include "quadspec/errors.hpp"

namespace quadspec {

// Polynomial potential V(x). Named kinds cover the two benchmark potentials;
// Polynomial accepts arbitrary coefficients up to degree 8, the range covered
// by the exact-quadrature path (element integrands stay within the order the
// chosen Gauss rule integrates exactly).
struct Potential {
  enum class Kind { Harmonic, Anharmonic, Polynomial };

  Kind kind = Kind::Harmonic;
  std::vector<double> coeffs;  // ascending powers of x

  static Potential harmonic();    // V(x) = x^2
  static Potential anharmonic();  // V(x) = x^4
  static Potential polynomial(std::vector<double> coeffs);

  int degree() const;
  double operator()(double x) const;
  long double eval(long double x) const;  // Horner in extended precision
  // Minimum over [-a, a] by dense sampling plus endpoint refinement; used only
  // to attach the negative-minimum warning, so modest accuracy suffices.
  double min_on(double a) const;
  std::string name() const;
};

// Inverse of Potential::name(): "harmonic", "anharmonic", or
// "poly:c0,c1,...". Throws InvalidArgument on anything else.
Potential parse_potential(const std::string& text);

}  // namespace quadspec
