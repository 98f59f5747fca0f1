#include "quadspec/mesh.hpp"

#include <string>

namespace quadspec {

Mesh build_mesh(const MeshSpec& spec) {
  if (!(spec.L > 0.0)) {
    throw InvalidArgument("build_mesh: L must be positive, got " + std::to_string(spec.L));
  }
  if (spec.n < 2) {
    throw InvalidArgument("build_mesh: need at least 2 subintervals, got " + std::to_string(spec.n));
  }
  if (spec.order != 3) {
    throw InvalidArgument("build_mesh: only cubic elements are supported");
  }
  if (spec.smoothness != 1) {
    throw InvalidArgument("build_mesh: only C1 elements are supported");
  }
  Mesh mesh;
  mesh.spec = spec;
  mesh.h = (spec.L + spec.L) / spec.n;
  mesh.nodes.resize(spec.n + 1);
  for (int l = 0; l <= spec.n; ++l) mesh.nodes[l] = -spec.L + l * mesh.h;
  mesh.nodes[spec.n] = spec.L;
  return mesh;
}

int DofTable::index(const Dof& dof) const {
  if (dof.node < 0 || dof.node > n) return -1;
  if (dof.kind == DofKind::Value) {
    if (dof.node == 0 || dof.node == n) return -1;
    return 2 * dof.node - 1;
  }
  if (dof.node == 0) return 0;
  if (dof.node == n) return 2 * n - 1;
  return 2 * dof.node;
}

DofTable build_dof_table(const Mesh& mesh) {
  DofTable table;
  table.n = mesh.spec.n;
  table.dofs.reserve(2 * table.n);
  table.dofs.push_back({DofKind::Derivative, 0});
  for (int j = 1; j < table.n; ++j) {
    table.dofs.push_back({DofKind::Value, j});
    table.dofs.push_back({DofKind::Derivative, j});
  }
  table.dofs.push_back({DofKind::Derivative, table.n});
  return table;
}

double eval_basis(const Mesh& mesh, const Dof& dof, double x, int deriv) {
  if (deriv < 0 || deriv > 2) {
    throw InvalidArgument("eval_basis: deriv must be 0, 1, or 2, got " + std::to_string(deriv));
  }
  const int n = mesh.spec.n;
  const int j = dof.node;
  if (j < 0 || j > n) {
    throw InvalidArgument("eval_basis: node index out of range");
  }
  if (dof.kind == DofKind::Value && (j == 0 || j == n)) {
    throw InvalidArgument("eval_basis: boundary Value DOF does not exist");
  }
  const auto& xs = mesh.nodes;
  const double lo = (j > 0) ? xs[j - 1] : xs[0];
  const double hi = (j < n) ? xs[j + 1] : xs[n];
  if (x < lo || x > hi) return 0.0;
  const bool value = (dof.kind == DofKind::Value);
  if (x < xs[j]) {
    // Right-end shape on element j-1.
    return shape_on_element(mesh.h, value ? 2 : 3, x - xs[j - 1], deriv);
  }
  if (j == n) {
    // x equals the last node; only the right-end shape on element n-1 applies.
    return shape_on_element(mesh.h, value ? 2 : 3, x - xs[n - 1], deriv);
  }
  // Left-end shape on element j.
  return shape_on_element(mesh.h, value ? 0 : 1, x - xs[j], deriv);
}

}  // namespace quadspec
