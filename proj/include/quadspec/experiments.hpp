#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quadspec/enclosure.hpp"
#include "quadspec/galerkin.hpp"
#include "quadspec/pencil.hpp"

namespace quadspec {

// Everything a single benchmark case needs: operator, truncation, mesh size,
// which eigenvalues to enclose, and the windowing and trust policy.
struct CaseConfig {
  Potential potential = Potential::harmonic();
  double L = 6.0;
  int n = 400;
  std::vector<int> targets = {1, 2, 3, 4, 5};  // 1-based eigenvalue indices
  double d_fraction = 0.4;  // window half-width as a fraction of the local gap
  double im_max = 1.0;
  double residual_gate = 1e-6;
  double pair_tol = 1e-8;
  SolverFlags flags;
};

// One requested eigenvalue with the conjugate pair selected for it. found is
// false when no pair landed in the window; certified additionally requires
// the pair's residual to pass the gate.
struct TargetEnclosure {
  int j = 0;
  double galerkin = 0.0;
  bool found = false;
  Enclosure enclosure;
  bool certified = false;
};

struct CaseResult {
  CaseConfig config;
  std::vector<double> galerkin_values;  // max(targets) + 1 values when available
  std::vector<TargetEnclosure> targets;
  std::vector<SecondOrderPoint> cloud;  // full spectrum, eigenvectors dropped
  int unmatched_points = 0;
  double elapsed_seconds = 0.0;
};

// Assembles the forms, solves the Galerkin and quadratic problems, and picks
// one conjugate pair per target: the window is centered on the target's
// Galerkin value with half-width d_fraction times the smaller adjacent gap,
// and the pair nearest in real part wins. Deterministic given the config.
CaseResult run_case(const CaseConfig& cfg);

struct SweepEntry {
  int n = 0;
  double h = 0.0;
  double r = 0.0;  // enclosure width; meaningful only when found
  bool found = false;
};

struct SweepResult {
  int j = 0;
  std::vector<SweepEntry> entries;
  std::optional<double> slope;  // log-log OLS over the found entries
};

// Enclosure width r(j, n) over the n-grid for each target, one case solve per
// n. Missing enclosures are flagged and excluded from the slope fit.
std::vector<SweepResult> sweep_targets(const CaseConfig& base, const std::vector<int>& n_list,
                                       const std::vector<int>& targets);
SweepResult residual_sweep(const CaseConfig& base, const std::vector<int>& n_list, int j);

// Default n-grid for rate reproduction.
const std::vector<int>& default_sweep_grid();

struct TruncationEntry {
  double L = 0.0;
  int n = 0;  // rounded so the element width tracks the requested h
  double galerkin = 0.0;
  double diff_to_last = 0.0;  // this value minus the largest-L value
};

// Galerkin value of target j per truncation half-width L at fixed element
// width h. Quantifies the domain-truncation error separately from the mesh
// error.
std::vector<TruncationEntry> truncation_sweep(const CaseConfig& base,
                                              const std::vector<double>& L_list, double h, int j);

// Ordinary least squares slope of log r against log n.
double fit_slope(const std::vector<std::pair<double, double>>& points);

struct FloorEstimate {
  int j = 0;
  std::vector<SweepEntry> entries;
  int threshold_n = 0;  // 0 when no floor was detected on the grid
};

// Scans the n-grid until the enclosure width exceeds 1.5x its running minimum,
// the heuristic for where rounding stops further refinement. Exploratory:
// the threshold depends on the eigensolver backend and arithmetic.
FloorEstimate floor_estimate(const CaseConfig& base, const std::vector<int>& n_list, int j);

// Serialization. All numbers are printed with 17 significant digits and rows
// follow deterministic orders, so equal results give byte-identical text.
std::string case_csv(const CaseResult& result);
std::string sweep_csv(const std::vector<SweepResult>& sweeps);
std::string truncation_csv(const std::vector<TruncationEntry>& rows);
std::string case_json(const CaseResult& result);
std::string sweep_json(const std::vector<SweepResult>& sweeps);
std::string truncation_json(const std::vector<TruncationEntry>& rows);

// Two-sided display rounding: low rounded down, up rounded up, to the given
// number of decimals, e.g. [0.99991, 1.00009] at 5 decimals.
std::string display_interval(const Enclosure& enc, int decimals);

}  // namespace quadspec
