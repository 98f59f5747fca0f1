#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadspec/mesh.hpp"

namespace quadspec {

enum class BoundarySide { None, Left, Right };

// Identifies one tabulated element-integral family: the integral of
// b_left^(deriv_left) * x^m * b_right^(deriv_right) where the two DOFs sit on
// the same or adjacent nodes. The tabulated families are the m-moments with
// derivs (0,0), the (1,1) and (2,2) families at m = 0, and the (2,0) families
// at m in {2, 4}. Boundary marks rows anchored at a domain endpoint.
struct LocalIntegralKey {
  DofKind left_kind = DofKind::Derivative;
  DofKind right_kind = DofKind::Derivative;
  int deriv_left = 0;
  int deriv_right = 0;
  int m = 0;
  int offset = 0;  // right DOF node minus left DOF node, in {-1, 0, +1}
  BoundarySide boundary = BoundarySide::None;
};

// One tabulated cell: a closed form for the integral as a polynomial in h and
// one node coordinate. For interior offset rows the tabulating coordinate is
// the right node of the shared element; boundary rows use the endpoint.
// `consistent` is the frozen outcome of the quadrature cross-check;
// closed_form_entry refuses to serve cells that failed it.
struct ClosedFormCell {
  const char* row;  // display name, e.g. "(p_j, p_j+1)"
  BoundarySide side = BoundarySide::None;
  DofKind kind_a = DofKind::Derivative;
  DofKind kind_b = DofKind::Derivative;
  int delta_a = 0;      // node of the left DOF relative to the anchor node
  int delta_b = 0;      // node of the right DOF relative to the anchor node
  int coord_delta = 0;  // tabulating coordinate node relative to the anchor
  int deriv_a = 0;
  int deriv_b = 0;
  int m = 0;
  double (*closed)(double h, double c) = nullptr;
  const char* closed_text = "";
  bool consistent = true;
};

const std::vector<ClosedFormCell>& closed_form_cells();

// The literal tabulated value for the key at element width h, parameterized by
// the tabulating node coordinate. Empty when the key matches no tabulated row
// or the row failed the cross-check (use verify_closed_forms to see both
// values in that case). Keys are matched up to transposition, which is valid
// because the scalar integrand commutes.
std::optional<double> closed_form_entry(const LocalIntegralKey& key, double h, double node_coord);

struct ClosedFormRowReport {
  std::string row;
  int deriv_a = 0;
  int deriv_b = 0;
  int m = 0;
  bool consistent = true;
  double closed_value = 0.0;  // at the worst sample
  double oracle_value = 0.0;
  double max_rel_dev = 0.0;
  std::string closed_text;
};

struct ClosedFormReport {
  std::vector<ClosedFormRowReport> rows;
  int verified = 0;
  int inconsistent = 0;
};

// Cross-checks every tabulated cell against quadrature on the given mesh,
// sampling boundary anchors and several interior anchors. A cell is verified
// when the relative deviation stays within 1e-12 at every sample; failing
// cells are reported with both values.
ClosedFormReport verify_closed_forms(const Mesh& mesh);

}  // namespace quadspec
