#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "quadspec/errors.hpp"
#include "quadspec/mesh.hpp"

using namespace quadspec;

TEST_CASE("uniform mesh geometry") {
  Mesh mesh = build_mesh({6.0, 400});
  CHECK(mesh.h == 0.03);
  CHECK(mesh.nodes.size() == 401);
  CHECK(mesh.nodes.front() == -6.0);
  CHECK(mesh.nodes.back() == 6.0);

  Mesh coarse = build_mesh({6.0, 100});
  CHECK(coarse.nodes[0] == -6.0);
  CHECK(coarse.nodes[1] == doctest::Approx(-5.88).epsilon(1e-14));
  CHECK(coarse.nodes[100] == 6.0);
}

TEST_CASE("dof table counts and indices") {
  Mesh mesh = build_mesh({1.0, 2});
  CHECK(mesh.nodes[0] == -1.0);
  CHECK(mesh.nodes[1] == 0.0);
  CHECK(mesh.nodes[2] == 1.0);
  DofTable table = build_dof_table(mesh);
  CHECK(table.size() == 4);
  CHECK(table.index({DofKind::Derivative, 0}) == 0);
  CHECK(table.index({DofKind::Value, 1}) == 1);
  CHECK(table.index({DofKind::Derivative, 1}) == 2);
  CHECK(table.index({DofKind::Derivative, 2}) == 3);
  CHECK(table.index({DofKind::Value, 0}) == -1);
  CHECK(table.index({DofKind::Value, 2}) == -1);
  CHECK(table.half_bandwidth == 3);
}

TEST_CASE("invalid specs rejected") {
  CHECK_THROWS_AS(build_mesh({-1.0, 10}), InvalidArgument);
  CHECK_THROWS_AS(build_mesh({0.0, 10}), InvalidArgument);
  CHECK_THROWS_AS(build_mesh({6.0, 1}), InvalidArgument);
  CHECK_THROWS_AS(build_mesh({6.0, 10, 2}), InvalidArgument);
  CHECK_THROWS_AS(build_mesh({6.0, 10, 3, 0}), InvalidArgument);
  Mesh mesh = build_mesh({6.0, 10});
  CHECK_THROWS_AS(eval_basis(mesh, {DofKind::Value, 3}, 0.0, 3), InvalidArgument);
}

TEST_CASE("nodal interpolation properties") {
  Mesh mesh = build_mesh({2.0, 8});
  for (int j = 1; j < 8; ++j) {
    CHECK(eval_basis(mesh, {DofKind::Value, j}, mesh.nodes[j], 0) == doctest::Approx(1.0));
    CHECK(eval_basis(mesh, {DofKind::Value, j}, mesh.nodes[j], 1) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(eval_basis(mesh, {DofKind::Derivative, j}, mesh.nodes[j], 0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(eval_basis(mesh, {DofKind::Derivative, j}, mesh.nodes[j], 1) == doctest::Approx(1.0));
  }
  // Value shape at an element midpoint.
  const double mid = mesh.nodes[4] + mesh.h / 2;
  CHECK(eval_basis(mesh, {DofKind::Value, 4}, mid, 0) == doctest::Approx(0.5));
}

TEST_CASE("cubic interpolant reproduction") {
  Mesh mesh = build_mesh({2.0, 8});
  const int n = mesh.spec.n;
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> pick(mesh.nodes[1], mesh.nodes[n - 1]);
  for (int trial = 0; trial < 100; ++trial) {
    const double x = pick(rng);
    double u = 0.0;
    for (int j = 0; j <= n; ++j) {
      const double fj = mesh.nodes[j] * mesh.nodes[j] * mesh.nodes[j];
      const double dfj = 3.0 * mesh.nodes[j] * mesh.nodes[j];
      if (j > 0 && j < n) u += fj * eval_basis(mesh, {DofKind::Value, j}, x, 0);
      u += dfj * eval_basis(mesh, {DofKind::Derivative, j}, x, 0);
    }
    CHECK(u == doctest::Approx(x * x * x).epsilon(1e-12));
  }
}

TEST_CASE("support locality is exact") {
  Mesh mesh = build_mesh({3.0, 12});
  for (int deriv = 0; deriv <= 2; ++deriv) {
    CHECK(eval_basis(mesh, {DofKind::Value, 4}, mesh.nodes[4] + 1.5 * mesh.h, deriv) == 0.0);
    CHECK(eval_basis(mesh, {DofKind::Value, 4}, mesh.nodes[4] - 2.0 * mesh.h, deriv) == 0.0);
    CHECK(eval_basis(mesh, {DofKind::Derivative, 4}, mesh.nodes[0], deriv) == 0.0);
  }
}

TEST_CASE("value and slope continuous across nodes") {
  const double h = 0.375;
  // Left-element trace at t = h against right-element trace at t = 0 for the
  // two shapes that continue across a node: value (cases 2 -> 0) and slope
  // (cases 3 -> 1).
  for (int deriv = 0; deriv <= 1; ++deriv) {
    const double left_value = shape_on_element<double>(h, 2, h, deriv);
    const double right_value = shape_on_element<double>(h, 0, 0.0, deriv);
    CHECK(std::abs(left_value - right_value) <= 1e-12);
    const double left_slope = shape_on_element<double>(h, 3, h, deriv);
    const double right_slope = shape_on_element<double>(h, 1, 0.0, deriv);
    CHECK(std::abs(left_slope - right_slope) <= 1e-12);
  }
}
