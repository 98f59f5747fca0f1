#pragma once

#include <string>

#include "quadspec/band_matrix.hpp"
#include "quadspec/mesh.hpp"
#include "quadspec/potential.hpp"

namespace quadspec {

// The three forms of the operator H u = -u'' + V u on the Hermite trial space:
//   A0 = [<b_j, b_k>]        (Gram matrix, positive definite)
//   A1 = [<b_j', b_k'> + <V b_j, b_k>]
//   A2 = [<b_j'', b_k''> - <b_j'', V b_k> - <V b_j, b_k''> + <V b_j, V b_k>]
// A2 uses elementwise second derivatives; the trial functions are C1 with
// piecewise-linear second derivative, so all products are plain L2 integrals.
struct AssembledForms {
  SymBandMatrix A0;
  SymBandMatrix A1;
  SymBandMatrix A2;
  Mesh mesh;
  Potential potential;
  std::string warning;  // set when min V < 0 on [-L, L]; the method still applies
};

// Integral of b_a^(deriv_a) * x^m * b_b^(deriv_b) over the shared support,
// by Gauss-Legendre quadrature exact for the polynomial integrand.
// deriv_a, deriv_b in {0, 1, 2}; 0 <= m <= 8. Disjoint supports give 0.
double local_moment(const Mesh& mesh, const Dof& dof_a, const Dof& dof_b, int deriv_a,
                    int deriv_b, int m);

// Same quadrature with the integrand replaced by its absolute value: the
// working magnitude of local_moment. Roundoff in local_moment is a small
// multiple of machine epsilon times this, even when the signed integral
// cancels to zero.
double local_moment_abs(const Mesh& mesh, const Dof& dof_a, const Dof& dof_b, int deriv_a,
                        int deriv_b, int m);

// Quadrature-based assembly. Element integrals are accumulated in extended
// precision and rounded to double once per entry; the Gauss order is exact for
// the polynomial integrands (8 points up to potential degree 4, more beyond).
// npts overrides the automatic Gauss order when positive; any order at or
// above the automatic one integrates the same polynomials exactly.
// Throws PositiveDefinitenessFailure when A0 fails its Cholesky check.
AssembledForms assemble_forms(const Mesh& mesh, const Potential& V, int npts = 0);

}  // namespace quadspec
