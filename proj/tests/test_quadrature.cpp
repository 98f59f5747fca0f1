#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "quadspec/errors.hpp"
#include "quadspec/quadrature.hpp"

using namespace quadspec;

namespace {

// Reference 8-point Gauss-Legendre rule on [-1, 1].
const double kRef8[8][2] = {
    {-0.96028985649753618, 0.10122853629037669},
    {-0.79666647741362673, 0.22238103445337434},
    {-0.52553240991632899, 0.31370664587788705},
    {-0.18343464249564978, 0.36268378337836177},
    {0.18343464249564978, 0.36268378337836177},
    {0.52553240991632899, 0.31370664587788705},
    {0.79666647741362673, 0.22238103445337434},
    {0.96028985649753618, 0.10122853629037669},
};

double integrate_monomial(const QuadratureRule& rule, int degree) {
  double total = 0.0;
  for (int i = 0; i < rule.npts; ++i) {
    total += rule.weights[i] * std::pow(rule.points[i], degree);
  }
  return total;
}

}  // namespace

TEST_CASE("eight point rule matches the reference table") {
  const QuadratureRule& rule = gauss_legendre(8);
  REQUIRE(rule.npts == 8);
  for (int i = 0; i < 8; ++i) {
    CHECK(std::abs(rule.points[i] - kRef8[i][0]) <= 1e-15);
    CHECK(std::abs(rule.weights[i] - kRef8[i][1]) <= 1e-15);
  }
}

TEST_CASE("polynomial exactness through degree 2n-1") {
  for (int npts : {8, 12, 16}) {
    const QuadratureRule& rule = gauss_legendre(npts);
    for (int degree = 0; degree <= 2 * npts - 1; ++degree) {
      const double exact = (degree % 2 == 1) ? 0.0 : 2.0 / (degree + 1);
      CHECK(std::abs(integrate_monomial(rule, degree) - exact) <= 1e-13);
    }
  }
}

TEST_CASE("weights positive and symmetric") {
  for (int npts : {5, 8, 12}) {
    const QuadratureRule& rule = gauss_legendre(npts);
    double total = 0.0;
    for (int i = 0; i < npts; ++i) {
      CHECK(rule.weights[i] > 0.0);
      CHECK(rule.points[i] == doctest::Approx(-rule.points[npts - 1 - i]).epsilon(1e-14));
      total += rule.weights[i];
    }
    CHECK(total == doctest::Approx(2.0).epsilon(1e-14));
  }
}

TEST_CASE("invalid point count rejected") {
  CHECK_THROWS_AS(gauss_legendre(0), InvalidArgument);
  CHECK_THROWS_AS(gauss_legendre(-3), InvalidArgument);
}
