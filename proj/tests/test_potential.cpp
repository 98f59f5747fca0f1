#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quadspec/errors.hpp"
#include "quadspec/potential.hpp"

using namespace quadspec;

TEST_CASE("benchmark potentials evaluate") {
  Potential harm = Potential::harmonic();
  CHECK(harm(2.0) == 4.0);
  CHECK(harm(-3.0) == 9.0);
  CHECK(harm.degree() == 2);
  CHECK(harm.name() == "harmonic");

  Potential anh = Potential::anharmonic();
  CHECK(anh(2.0) == 16.0);
  CHECK(anh(-1.5) == doctest::Approx(5.0625));
  CHECK(anh.degree() == 4);
  CHECK(anh.name() == "anharmonic");
}

TEST_CASE("general polynomial evaluation") {
  Potential p = Potential::polynomial({1.0, 0.0, -2.0, 0.5});
  CHECK(p(2.0) == doctest::Approx(1.0 - 8.0 + 4.0));
  CHECK(p.degree() == 3);
  CHECK(p(0.0) == 1.0);
  // Trailing zero coefficients do not inflate the degree.
  Potential q = Potential::polynomial({3.0, 1.0, 0.0, 0.0});
  CHECK(q.degree() == 1);
}

TEST_CASE("degree cap enforced") {
  std::vector<double> coeffs(10, 0.0);
  coeffs[9] = 1.0;  // degree 9
  CHECK_THROWS_AS(Potential::polynomial(coeffs), InvalidArgument);
  coeffs[9] = 0.0;
  coeffs[8] = 1.0;  // degree 8 is the cap
  CHECK(Potential::polynomial(coeffs).degree() == 8);
}

TEST_CASE("minimum scan flags negative dips") {
  CHECK(Potential::harmonic().min_on(6.0) == doctest::Approx(0.0).epsilon(1e-10));
  Potential shifted = Potential::polynomial({-1.0, 0.0, 1.0});  // x^2 - 1
  CHECK(shifted.min_on(6.0) == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("name round trip through the parser") {
  CHECK(parse_potential("harmonic").name() == "harmonic");
  CHECK(parse_potential("anharmonic").name() == "anharmonic");
  Potential p = parse_potential("poly:1,0,-2,0.5");
  CHECK(p.degree() == 3);
  CHECK(p(1.0) == doctest::Approx(-0.5));
  CHECK(parse_potential(p.name())(1.0) == doctest::Approx(-0.5));
  CHECK_THROWS_AS(parse_potential("cubic"), InvalidArgument);
  CHECK_THROWS_AS(parse_potential("poly:"), InvalidArgument);
  CHECK_THROWS_AS(parse_potential("poly:1,two"), InvalidArgument);
}
