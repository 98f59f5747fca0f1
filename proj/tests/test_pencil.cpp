#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "quadspec/assembly.hpp"
#include "quadspec/errors.hpp"
#include "quadspec/pencil.hpp"

using namespace quadspec;
using complexd = std::complex<double>;

namespace {

SymBandMatrix scalar_matrix(double v) {
  SymBandMatrix m(1, 0);
  m.data[0] = v;
  return m;
}

// Pencil for the operator diag(lam1, lam2) compressed onto span{(c, s)} with
// c = cos(theta), s = sin(theta): a0 = 1, a1 = <Av,v>, a2 = |Av|^2.
QuadraticPencil rank_one_pencil(double lam1, double lam2, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const double a1 = lam1 * c * c + lam2 * s * s;
  const double a2 = lam1 * lam1 * c * c + lam2 * lam2 * s * s;
  return make_pencil(scalar_matrix(a2), scalar_matrix(a1), scalar_matrix(1.0));
}

}  // namespace

TEST_CASE("pencil evaluation on the scalar toy") {
  QuadraticPencil toy = make_pencil(scalar_matrix(2.0), scalar_matrix(1.0), scalar_matrix(1.0));
  CHECK(pencil_eval(toy, 0.0)(0, 0) == complexd(2.0, 0.0));
  // 1+i is a root of z^2 - 2z + 2.
  CHECK(std::abs(pencil_eval(toy, complexd(1.0, 1.0))(0, 0)) <= 1e-15);
}

TEST_CASE("companion blocks of the scalar toy") {
  QuadraticPencil toy = make_pencil(scalar_matrix(2.0), scalar_matrix(1.0), scalar_matrix(1.0));
  CompanionPair pair = companion(toy);
  REQUIRE(pair.C.rows() == 2);
  CHECK(pair.C(0, 0) == 0.0);
  CHECK(pair.C(0, 1) == 1.0);
  CHECK(pair.C(1, 0) == -2.0);
  CHECK(pair.C(1, 1) == 2.0);
  CHECK(pair.D.isApprox(Eigen::MatrixXd::Identity(2, 2)));

  Mesh mesh = build_mesh({6.0, 10});
  CompanionPair big = companion(make_pencil(assemble_forms(mesh, Potential::harmonic())));
  CHECK(big.C.rows() == 40);
  CHECK(big.D.rows() == 40);
}

TEST_CASE("singular gram matrix is rejected") {
  QuadraticPencil broken = make_pencil(scalar_matrix(1.0), scalar_matrix(1.0), scalar_matrix(0.0));
  CHECK_THROWS_AS(companion(broken), SingularMass);
  CHECK_THROWS_AS(second_order_spectrum(broken), SingularMass);
}

TEST_CASE("hermiticity of the pencil in z") {
  Mesh mesh = build_mesh({6.0, 8});
  QuadraticPencil pencil = make_pencil(assemble_forms(mesh, Potential::harmonic()));
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> pick(-2.0, 2.0);
  for (int trial = 0; trial < 5; ++trial) {
    const complexd z(pick(rng), pick(rng));
    Eigen::MatrixXcd qz = pencil_eval(pencil, z);
    Eigen::MatrixXcd qbar = pencil_eval(pencil, std::conj(z));
    CHECK((qbar - qz.adjoint()).cwiseAbs().maxCoeff() <= 1e-12 * qz.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("rank one compression of diag(0,2)") {
  QuadraticPencil toy = rank_one_pencil(0.0, 2.0, std::atan2(1.0, 1.0));
  std::vector<SecondOrderPoint> points = second_order_spectrum(toy);
  REQUIRE(points.size() == 2);
  CHECK(points[0].z.real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(points[0].z.imag() == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(points[1].z.real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(points[1].z.imag() == doctest::Approx(1.0).epsilon(1e-12));
  // The enclosure [Re-|Im|, Re+|Im|] = [0, 2] meets the spectrum {0, 2}, and
  // the distance bound at the midpoint is exactly 1.
  CHECK(distance_bound(toy, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exact eigenvector gives a double real point") {
  // diag(3, 7) compressed onto its own eigenvector e1.
  QuadraticPencil toy = rank_one_pencil(3.0, 7.0, 0.0);
  std::vector<SecondOrderPoint> points = second_order_spectrum(toy);
  REQUIRE(points.size() == 2);
  for (const auto& p : points) {
    CHECK(std::abs(p.z - complexd(3.0, 0.0)) <= 1e-6);
  }
  CHECK(distance_bound(toy, 3.0) <= 1e-12);
}

TEST_CASE("brute force equivalence on rank one compressions") {
  for (double lam1 : {0.0, 1.5}) {
    for (double lam2 : {2.0, 4.0}) {
      for (double theta : {0.3, 0.7, 1.1}) {
        QuadraticPencil toy = rank_one_pencil(lam1, lam2, theta);
        const double c = std::cos(theta), s = std::sin(theta);
        const double a1 = lam1 * c * c + lam2 * s * s;
        const double a2 = lam1 * lam1 * c * c + lam2 * lam2 * s * s;
        // Roots of z^2 - 2 a1 z + a2.
        const complexd disc = std::sqrt(complexd(a1 * a1 - a2, 0.0));
        std::vector<complexd> expected = {a1 - disc, a1 + disc};
        std::sort(expected.begin(), expected.end(), [](complexd a, complexd b) {
          return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
        std::vector<SecondOrderPoint> points = second_order_spectrum(toy);
        REQUIRE(points.size() == 2);
        for (int k = 0; k < 2; ++k) {
          CHECK(std::abs(points[k].z - expected[k]) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("spectrum output is sorted with residuals attached") {
  Mesh mesh = build_mesh({6.0, 20});
  QuadraticPencil pencil = make_pencil(assemble_forms(mesh, Potential::harmonic()));
  std::vector<SecondOrderPoint> points = second_order_spectrum(pencil);
  REQUIRE(points.size() == 80);
  for (size_t k = 1; k < points.size(); ++k) {
    const bool ordered = points[k - 1].z.real() < points[k].z.real() ||
                         (points[k - 1].z.real() == points[k].z.real() &&
                          points[k - 1].z.imag() <= points[k].z.imag());
    CHECK(ordered);
  }
  for (const auto& p : points) {
    CHECK(p.residual >= 0.0);
    CHECK(std::isfinite(p.residual));
    CHECK(p.residual <= 1e-8);
  }
}

TEST_CASE("conjugate symmetry and exact residual spot checks") {
  Mesh mesh = build_mesh({6.0, 20});
  QuadraticPencil pencil = make_pencil(assemble_forms(mesh, Potential::harmonic()));
  std::vector<SecondOrderPoint> points = second_order_spectrum(pencil);
  for (const auto& p : points) {
    bool has_partner = false;
    for (const auto& q : points) {
      if (std::abs(q.z - std::conj(p.z)) <= 1e-8 * (1.0 + std::abs(p.z))) {
        has_partner = true;
        break;
      }
    }
    CHECK(has_partner);
  }
  std::mt19937 rng(17);
  std::uniform_int_distribution<size_t> pick(0, points.size() - 1);
  for (int trial = 0; trial < 10; ++trial) {
    CHECK(exact_residual(pencil, points[pick(rng)].z) <= 1e-8);
  }
}

TEST_CASE("solver paths agree") {
  Mesh mesh = build_mesh({6.0, 12});
  QuadraticPencil pencil = make_pencil(assemble_forms(mesh, Potential::harmonic()));
  std::vector<SecondOrderPoint> qz = second_order_spectrum(pencil);
  SolverFlags reduced;
  reduced.method = EigMethod::Reduced;
  std::vector<SecondOrderPoint> red = second_order_spectrum(pencil, reduced);
  REQUIRE(qz.size() == red.size());
  // Nearest-neighbour match, so ties in the (Re, Im) sort cannot fail the test.
  for (const auto& p : qz) {
    double best = 1e300;
    for (const auto& q : red) best = std::min(best, std::abs(p.z - q.z));
    CHECK(best <= 1e-9 * (1.0 + std::abs(p.z)));
  }
}

TEST_CASE("distance bound dominates the true distance") {
  Mesh mesh = build_mesh({6.0, 100});
  QuadraticPencil pencil = make_pencil(assemble_forms(mesh, Potential::harmonic()));
  for (int k = 0; k < 50; ++k) {
    const double x = 10.0 * k / 49.0;
    double dist = 1e300;
    for (int j = 0; j <= 12; ++j) dist = std::min(dist, std::abs(x - (2 * j + 1)));
    CHECK(distance_bound(pencil, x) >= dist - 1e-8);
  }
}

TEST_CASE("orthonormalized reduction squares the bound") {
  Mesh mesh = build_mesh({6.0, 100});
  QuadraticPencil pencil = make_pencil(assemble_forms(mesh, Potential::harmonic()));
  for (int k = 0; k < 10; ++k) {
    const double x = 0.3 + k;
    const double f = distance_bound(pencil, x);
    const double g = orthonormalized_min_singular(pencil, x);
    CHECK(std::abs(g - f * f) <= 1e-8 * std::max(1.0, std::abs(g)));
  }
}
