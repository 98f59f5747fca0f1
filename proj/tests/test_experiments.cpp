#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "quadspec/errors.hpp"
#include "quadspec/experiments.hpp"

using namespace quadspec;

TEST_CASE("slope fit reproduces exact power laws") {
  // Quartering the width per doubling is slope -2 on the nose.
  CHECK(fit_slope({{100.0, 1e-2}, {200.0, 2.5e-3}}) == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(fit_slope({{1.0, 5.0}, {10.0, 5.0}}) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(fit_slope({{100.0, 1e-2}, {200.0, 2.6e-3}, {400.0, 6.2e-4}}) ==
        doctest::Approx(-2.0).epsilon(0.05));

  for (double s : {-1.0, -2.0, -3.0}) {
    std::vector<std::pair<double, double>> pts;
    for (int n : {50, 100, 200, 400}) pts.emplace_back(n, 3.0 * std::pow(n, s));
    CHECK(fit_slope(pts) == doctest::Approx(s).epsilon(1e-12));
  }
}

TEST_CASE("slope fit validates its input") {
  CHECK_THROWS_AS(fit_slope({}), InvalidArgument);
  CHECK_THROWS_AS(fit_slope({{100.0, 1e-2}}), InvalidArgument);
  CHECK_THROWS_AS(fit_slope({{100.0, 1e-2}, {200.0, 0.0}}), InvalidArgument);
  CHECK_THROWS_AS(fit_slope({{100.0, 1e-2}, {200.0, -1e-3}}), InvalidArgument);
  CHECK_THROWS_AS(fit_slope({{100.0, 1e-2}, {100.0, 2e-2}}), InvalidArgument);
}

TEST_CASE("display rounding is always outward") {
  Enclosure enc;
  enc.low = 0.999919;
  enc.up = 1.000081;
  // Nearest-rounding would print 0.99992 and 1.00008; the enclosure may not
  // shrink in print, so the ends move apart.
  CHECK(display_interval(enc, 5) == "[0.99991, 1.00009]");

  Enclosure anh;
  anh.low = 3.799441;
  anh.up = 3.799891;
  CHECK(display_interval(anh, 5) == "[3.79944, 3.79990]");

  Enclosure exact;
  exact.low = 0.25;
  exact.up = 0.75;
  CHECK(display_interval(exact, 2) == "[0.25, 0.75]");

  CHECK_THROWS_AS(display_interval(enc, -1), InvalidArgument);
  CHECK_THROWS_AS(display_interval(enc, 18), InvalidArgument);
}

TEST_CASE("a small harmonic case encloses the first three levels") {
  CaseConfig cfg;
  cfg.n = 100;
  cfg.targets = {1, 2, 3};
  CaseResult result = run_case(cfg);

  REQUIRE(result.galerkin_values.size() == 4);
  REQUIRE(result.targets.size() == 3);
  CHECK(result.cloud.size() == 400);
  CHECK(result.unmatched_points == 0);

  for (int k = 0; k < 3; ++k) {
    const TargetEnclosure& t = result.targets[k];
    CHECK(t.j == k + 1);
    REQUIRE(t.found);
    CHECK(t.certified);
    const double level = 2 * k + 1;
    CHECK(t.enclosure.low <= t.galerkin);
    CHECK(t.galerkin <= t.enclosure.up + 1e-10);
    CHECK(t.enclosure.low <= level + 1e-10);
    CHECK(t.enclosure.up >= level - 1e-10);
    CHECK(t.enclosure.width < 0.05);
    CHECK(t.enclosure.source_residual <= cfg.residual_gate);
  }
}

TEST_CASE("case output is deterministic") {
  CaseConfig cfg;
  cfg.n = 50;
  cfg.targets = {1, 2};
  const std::string first = case_csv(run_case(cfg));
  const std::string second = case_csv(run_case(cfg));
  CHECK(first == second);
  CHECK(first.rfind("j,galerkin,mu_re,mu_im,low,up,width,residual,certified\n", 0) == 0);
  // Header plus one row per target.
  CHECK(std::count(first.begin(), first.end(), '\n') == 3);
}

TEST_CASE("case json carries the config and the cloud") {
  CaseConfig cfg;
  cfg.n = 50;
  cfg.targets = {2, 1, 2};  // duplicates and order are normalized
  CaseResult result = run_case(cfg);
  nlohmann::json doc = nlohmann::json::parse(case_json(result));
  CHECK(doc["config"]["n"] == 50);
  CHECK(doc["config"]["potential"] == "harmonic");
  CHECK(doc["config"]["method"] == "generalized");
  REQUIRE(doc["targets"].size() == 2);
  CHECK(doc["targets"][0]["j"] == 1);
  CHECK(doc["targets"][1]["j"] == 2);
  CHECK(doc["cloud"].size() == 200);
  CHECK(doc["unmatched_points"] == 0);
}

TEST_CASE("width sweep shrinks at second order") {
  CaseConfig base;
  std::vector<SweepResult> sweeps = sweep_targets(base, {40, 60, 80}, {1});
  REQUIRE(sweeps.size() == 1);
  const SweepResult& sweep = sweeps[0];
  CHECK(sweep.j == 1);
  REQUIRE(sweep.entries.size() == 3);
  for (size_t k = 0; k < sweep.entries.size(); ++k) {
    const SweepEntry& e = sweep.entries[k];
    REQUIRE(e.found);
    CHECK(e.r > 0);
    CHECK(e.h == doctest::Approx(12.0 / e.n).epsilon(1e-15));
    if (k > 0) CHECK(e.r < sweep.entries[k - 1].r);
  }
  REQUIRE(sweep.slope.has_value());
  CHECK(*sweep.slope > -2.5);
  CHECK(*sweep.slope < -1.5);

  const std::string csv = sweep_csv(sweeps);
  CHECK(csv.rfind("j,n,h,r,slope\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("sweep grids are validated") {
  CaseConfig base;
  CHECK_THROWS_AS(sweep_targets(base, {40, 60}, {1}), InvalidArgument);
  CHECK_THROWS_AS(sweep_targets(base, {40, 60, 60}, {1}), InvalidArgument);
  CHECK_THROWS_AS(sweep_targets(base, {40, 60, 80}, {}), InvalidArgument);
  CHECK_THROWS_AS(sweep_targets(base, {40, 60, 80}, {0}), InvalidArgument);
}

TEST_CASE("default sweep grid is the standard one") {
  const std::vector<int> expected = {100, 150, 200, 250, 300, 350, 400};
  CHECK(default_sweep_grid() == expected);
}

TEST_CASE("truncation error decays toward the widest box") {
  CaseConfig base;
  std::vector<TruncationEntry> rows = truncation_sweep(base, {3.0, 4.0, 5.0, 6.0}, 0.03, 1);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].n == 200);
  CHECK(rows[3].n == 400);
  CHECK(rows[3].diff_to_last == 0.0);
  // Shrinking the box raises the ground state; the excess falls off fast.
  CHECK(rows[0].diff_to_last >= 1e-6);
  for (size_t k = 0; k + 1 < rows.size(); ++k) {
    CHECK(rows[k].diff_to_last >= rows[k + 1].diff_to_last - 1e-10);
    CHECK(rows[k].diff_to_last >= -1e-12);
  }
  const std::string csv = truncation_csv(rows);
  CHECK(csv.rfind("L,n,galerkin,diff_to_last\n", 0) == 0);

  CHECK_THROWS_AS(truncation_sweep(base, {}, 0.03, 1), InvalidArgument);
  CHECK_THROWS_AS(truncation_sweep(base, {4.0, 3.0}, 0.03, 1), InvalidArgument);
  CHECK_THROWS_AS(truncation_sweep(base, {3.0, 4.0}, 0.0, 1), InvalidArgument);
  CHECK_THROWS_AS(truncation_sweep(base, {3.0, 4.0}, 0.03, 0), InvalidArgument);
}
