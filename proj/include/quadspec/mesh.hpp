#pragma once

#include <vector>

#include "quadspec/errors.hpp"

namespace quadspec {

// Uniform mesh of [-L, L] with n subintervals carrying C1 cubic Hermite
// elements. Element order and smoothness are fixed; other values are rejected.
struct MeshSpec {
  double L = 6.0;
  int n = 400;
  int order = 3;
  int smoothness = 1;
};

struct Mesh {
  MeshSpec spec;
  std::vector<double> nodes;  // x_l = -L + l*h, endpoint pinned to L exactly
  double h = 0.0;
};

enum class DofKind { Value, Derivative };

struct Dof {
  DofKind kind = DofKind::Value;
  int node = 0;
};

// Global ordering: q_0, (p_1, q_1), ..., (p_{n-1}, q_{n-1}), q_n, where p_j is
// the Value DOF and q_j the Derivative DOF at node j. Value DOFs exist only at
// interior nodes (the operator acts on functions vanishing at the endpoints);
// Derivative DOFs exist at every node. Total count N = 2n. Two DOFs interact
// only when their nodes are adjacent, so all assembled forms have
// half-bandwidth <= 3 in global index units.
struct DofTable {
  int n = 0;  // subinterval count of the generating mesh
  std::vector<Dof> dofs;
  int half_bandwidth = 3;

  int size() const { return static_cast<int>(dofs.size()); }
  // Global column of a DOF, or -1 when it does not exist (boundary Value DOF).
  int index(const Dof& dof) const;
};

Mesh build_mesh(const MeshSpec& spec);
DofTable build_dof_table(const Mesh& mesh);

// Hermite shape function (deriv = 0) or its 1st/2nd derivative at global
// coordinate x. Exactly zero outside the DOF's two-element support, including
// x outside [-L, L]. Normalization: p_j(x_j) = 1, p_j'(x_j) = 0, q_j(x_j) = 0,
// q_j'(x_j) = 1.
double eval_basis(const Mesh& mesh, const Dof& dof, double x, int deriv);

// Shape functions on the reference element [0, h]; shape s in {0: value-left,
// 1: slope-left, 2: value-right, 3: slope-right}, deriv in {0, 1, 2}.
// Evaluating in the local coordinate t = x - x_l avoids the cancellation the
// global-coordinate cubics suffer at large |x|. Templated so assembly can run
// the same formulas in extended precision.
template <typename Real>
Real shape_on_element(Real h, int s, Real t, int deriv) {
  switch (4 * deriv + s) {
    case 0:  return (t - h) * (t - h) * (h + 2 * t) / (h * h * h);
    case 1:  return t * ((t - h) * (t - h)) / (h * h);
    case 2:  return t * t * (3 * h - 2 * t) / (h * h * h);
    case 3:  return t * t * (t - h) / (h * h);
    case 4:  return 6 * t * (t - h) / (h * h * h);
    case 5:  return (t - h) * (3 * t - h) / (h * h);
    case 6:  return 6 * t * (h - t) / (h * h * h);
    case 7:  return t * (3 * t - 2 * h) / (h * h);
    case 8:  return (12 * t - 6 * h) / (h * h * h);
    case 9:  return (6 * t - 4 * h) / (h * h);
    case 10: return (6 * h - 12 * t) / (h * h * h);
    case 11: return (6 * t - 2 * h) / (h * h);
    default: throw InvalidArgument("shape_on_element: shape index in 0..3, deriv in 0..2");
  }
}

}  // namespace quadspec
