#include "quadspec/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "quadspec/errors.hpp"

namespace quadspec {
namespace {

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<int> normalized_targets(std::vector<int> targets) {
  if (targets.empty()) throw InvalidArgument("run_case: at least one target index required");
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  if (targets.front() < 1) throw InvalidArgument("run_case: target indices are 1-based");
  return targets;
}

void check_grid(const std::vector<int>& n_list) {
  if (n_list.size() < 3) throw InvalidArgument("sweep: need at least 3 mesh sizes");
  for (size_t k = 1; k < n_list.size(); ++k) {
    if (n_list[k] <= n_list[k - 1]) throw InvalidArgument("sweep: mesh sizes must be ascending");
  }
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

CaseResult run_case(const CaseConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  CaseResult result;
  result.config = cfg;
  result.config.targets = normalized_targets(cfg.targets);

  const Mesh mesh = build_mesh({cfg.L, cfg.n});
  const AssembledForms forms = assemble_forms(mesh, cfg.potential);
  const int N = forms.A0.dim;
  const int jmax = result.config.targets.back();
  if (jmax > N) throw InvalidArgument("run_case: target index beyond trial-space dimension");
  result.galerkin_values = galerkin_eigenvalues(forms, std::min(N, jmax + 1));

  const QuadraticPencil pencil = make_pencil(forms);
  std::vector<SecondOrderPoint> points = second_order_spectrum(pencil, cfg.flags);
  const PairingResult pairing = pair_conjugates(points, cfg.pair_tol);
  result.unmatched_points = static_cast<int>(pairing.unmatched.size());

  const std::vector<double>& gal = result.galerkin_values;
  for (int j : result.config.targets) {
    TargetEnclosure target;
    target.j = j;
    target.galerkin = gal[j - 1];
    const double inf = std::numeric_limits<double>::infinity();
    const double gap_down = j >= 2 ? gal[j - 1] - gal[j - 2] : inf;
    const double gap_up = j < static_cast<int>(gal.size()) ? gal[j] - gal[j - 1] : inf;
    double gap = std::min(gap_down, gap_up);
    if (!std::isfinite(gap)) gap = std::max(1.0, std::abs(target.galerkin));
    const double d = cfg.d_fraction * gap;
    if (d > 0) {
      const std::vector<Enclosure> hits =
          make_enclosures(pairing.pairs, {target.galerkin, d}, cfg.im_max);
      const Enclosure* best = nullptr;
      for (const Enclosure& enc : hits) {
        if (!best ||
            std::abs(enc.mu.real() - target.galerkin) < std::abs(best->mu.real() - target.galerkin)) {
          best = &enc;
        }
      }
      if (best) {
        target.found = true;
        target.enclosure = *best;
        target.certified = cfg.flags.want_vectors && best->source_residual <= cfg.residual_gate;
      }
    }
    result.targets.push_back(target);
  }

  result.cloud.reserve(points.size());
  for (SecondOrderPoint& pt : points) {
    pt.u.resize(0);
    result.cloud.push_back(std::move(pt));
  }
  result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

std::vector<SweepResult> sweep_targets(const CaseConfig& base, const std::vector<int>& n_list,
                                       const std::vector<int>& targets) {
  check_grid(n_list);
  const std::vector<int> wanted = normalized_targets(targets);
  std::vector<SweepResult> sweeps(wanted.size());
  for (size_t t = 0; t < wanted.size(); ++t) sweeps[t].j = wanted[t];

  for (int n : n_list) {
    CaseConfig cfg = base;
    cfg.n = n;
    cfg.targets = wanted;
    cfg.flags.want_vectors = false;  // widths only; skips the eigenvector pass
    const CaseResult result = run_case(cfg);
    for (size_t t = 0; t < wanted.size(); ++t) {
      SweepEntry entry;
      entry.n = n;
      entry.h = (cfg.L + cfg.L) / n;
      entry.found = result.targets[t].found;
      entry.r = entry.found ? result.targets[t].enclosure.width : kNaN;
      sweeps[t].entries.push_back(entry);
    }
  }

  for (SweepResult& sweep : sweeps) {
    std::vector<std::pair<double, double>> fit_points;
    for (const SweepEntry& entry : sweep.entries) {
      if (entry.found && entry.r > 0) fit_points.emplace_back(entry.n, entry.r);
    }
    if (fit_points.size() >= 2) sweep.slope = fit_slope(fit_points);
  }
  return sweeps;
}

SweepResult residual_sweep(const CaseConfig& base, const std::vector<int>& n_list, int j) {
  return sweep_targets(base, n_list, {j}).front();
}

const std::vector<int>& default_sweep_grid() {
  static const std::vector<int> grid = {100, 150, 200, 250, 300, 350, 400};
  return grid;
}

std::vector<TruncationEntry> truncation_sweep(const CaseConfig& base,
                                              const std::vector<double>& L_list, double h, int j) {
  if (L_list.empty()) throw InvalidArgument("truncation_sweep: empty L list");
  for (size_t k = 1; k < L_list.size(); ++k) {
    if (L_list[k] <= L_list[k - 1]) throw InvalidArgument("truncation_sweep: L values must be ascending");
  }
  if (!(h > 0)) throw InvalidArgument("truncation_sweep: element width must be positive");
  if (j < 1) throw InvalidArgument("truncation_sweep: target index is 1-based");

  std::vector<TruncationEntry> rows;
  for (double L : L_list) {
    TruncationEntry row;
    row.L = L;
    row.n = static_cast<int>(std::max<long>(2, std::llround((L + L) / h)));
    const Mesh mesh = build_mesh({L, row.n});
    const AssembledForms forms = assemble_forms(mesh, base.potential);
    if (j > forms.A0.dim) throw InvalidArgument("truncation_sweep: target index beyond trial-space dimension");
    row.galerkin = galerkin_eigenvalues(forms, j).back();
    rows.push_back(row);
  }
  for (TruncationEntry& row : rows) row.diff_to_last = row.galerkin - rows.back().galerkin;
  return rows;
}

double fit_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2) throw InvalidArgument("fit_slope: need at least 2 points");
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [n, r] : points) {
    if (!(n > 0) || !(r > 0)) throw InvalidArgument("fit_slope: points must be positive for log-log fit");
    mean_x += std::log(n);
    mean_y += std::log(r);
  }
  mean_x /= points.size();
  mean_y /= points.size();
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& [n, r] : points) {
    const double dx = std::log(n) - mean_x;
    sxx += dx * dx;
    sxy += dx * (std::log(r) - mean_y);
  }
  if (sxx == 0) throw InvalidArgument("fit_slope: mesh sizes must not be all equal");
  return sxy / sxx;
}

FloorEstimate floor_estimate(const CaseConfig& base, const std::vector<int>& n_list, int j) {
  if (n_list.empty()) throw InvalidArgument("floor_estimate: empty mesh-size list");
  FloorEstimate result;
  result.j = j;
  double running_min = std::numeric_limits<double>::infinity();
  for (int n : n_list) {
    CaseConfig cfg = base;
    cfg.n = n;
    cfg.targets = {j};
    cfg.flags.want_vectors = false;
    const CaseResult res = run_case(cfg);
    SweepEntry entry;
    entry.n = n;
    entry.h = (cfg.L + cfg.L) / n;
    entry.found = res.targets.front().found;
    entry.r = entry.found ? res.targets.front().enclosure.width : kNaN;
    result.entries.push_back(entry);
    if (!entry.found || !(entry.r > 0)) continue;
    if (std::isfinite(running_min) && entry.r > 1.5 * running_min) {
      result.threshold_n = n;
      break;  // the width stopped decreasing; later meshes only cost time
    }
    running_min = std::min(running_min, entry.r);
  }
  return result;
}

std::string case_csv(const CaseResult& result) {
  std::string out = "j,galerkin,mu_re,mu_im,low,up,width,residual,certified\n";
  for (const TargetEnclosure& t : result.targets) {
    out += std::to_string(t.j) + "," + num17(t.galerkin) + ",";
    if (t.found) {
      const Enclosure& e = t.enclosure;
      out += num17(e.mu.real()) + "," + num17(e.mu.imag()) + "," + num17(e.low) + "," +
             num17(e.up) + "," + num17(e.width) + "," + num17(e.source_residual) + "," +
             (t.certified ? "1" : "0");
    } else {
      out += "nan,nan,nan,nan,nan,nan,0";
    }
    out += "\n";
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepResult>& sweeps) {
  std::string out = "j,n,h,r,slope\n";
  for (const SweepResult& sweep : sweeps) {
    const double slope = sweep.slope.value_or(kNaN);
    for (const SweepEntry& entry : sweep.entries) {
      out += std::to_string(sweep.j) + "," + std::to_string(entry.n) + "," + num17(entry.h) + "," +
             num17(entry.r) + "," + num17(slope) + "\n";
    }
  }
  return out;
}

std::string truncation_csv(const std::vector<TruncationEntry>& rows) {
  std::string out = "L,n,galerkin,diff_to_last\n";
  for (const TruncationEntry& row : rows) {
    out += num17(row.L) + "," + std::to_string(row.n) + "," + num17(row.galerkin) + "," +
           num17(row.diff_to_last) + "\n";
  }
  return out;
}

namespace {

nlohmann::json config_json(const CaseConfig& cfg) {
  return {
      {"potential", cfg.potential.name()},
      {"L", cfg.L},
      {"n", cfg.n},
      {"targets", cfg.targets},
      {"d_fraction", cfg.d_fraction},
      {"im_max", cfg.im_max},
      {"residual_gate", cfg.residual_gate},
      {"pair_tol", cfg.pair_tol},
      {"method", cfg.flags.method == EigMethod::Generalized ? "generalized" : "reduced"},
      {"balance", cfg.flags.balance},
      {"want_vectors", cfg.flags.want_vectors},
  };
}

}  // namespace

std::string case_json(const CaseResult& result) {
  nlohmann::json doc;
  doc["config"] = config_json(result.config);
  doc["galerkin"] = result.galerkin_values;
  doc["targets"] = nlohmann::json::array();
  for (const TargetEnclosure& t : result.targets) {
    nlohmann::json row = {{"j", t.j}, {"galerkin", t.galerkin}, {"found", t.found}};
    if (t.found) {
      row["mu_re"] = t.enclosure.mu.real();
      row["mu_im"] = t.enclosure.mu.imag();
      row["low"] = t.enclosure.low;
      row["up"] = t.enclosure.up;
      row["width"] = t.enclosure.width;
      row["residual"] = t.enclosure.source_residual;
      row["certified"] = t.certified;
    }
    doc["targets"].push_back(row);
  }
  doc["cloud"] = nlohmann::json::array();
  for (const SecondOrderPoint& pt : result.cloud) {
    doc["cloud"].push_back({{"re", pt.z.real()}, {"im", pt.z.imag()}, {"residual", pt.residual}});
  }
  doc["unmatched_points"] = result.unmatched_points;
  doc["elapsed_seconds"] = result.elapsed_seconds;
  return doc.dump(2) + "\n";
}

std::string sweep_json(const std::vector<SweepResult>& sweeps) {
  nlohmann::json doc = nlohmann::json::array();
  for (const SweepResult& sweep : sweeps) {
    nlohmann::json entry = {{"j", sweep.j}, {"entries", nlohmann::json::array()}};
    if (sweep.slope) {
      entry["slope"] = *sweep.slope;
    } else {
      entry["slope"] = nullptr;
    }
    for (const SweepEntry& e : sweep.entries) {
      entry["entries"].push_back({{"n", e.n}, {"h", e.h}, {"r", e.r}, {"found", e.found}});
    }
    doc.push_back(entry);
  }
  return doc.dump(2) + "\n";
}

std::string truncation_json(const std::vector<TruncationEntry>& rows) {
  nlohmann::json doc = nlohmann::json::array();
  for (const TruncationEntry& row : rows) {
    doc.push_back({{"L", row.L}, {"n", row.n}, {"galerkin", row.galerkin}, {"diff_to_last", row.diff_to_last}});
  }
  return doc.dump(2) + "\n";
}

std::string display_interval(const Enclosure& enc, int decimals) {
  if (decimals < 0 || decimals > 17) throw InvalidArgument("display_interval: decimals in 0..17");
  const double scale = std::pow(10.0, decimals);
  const double low = std::floor(enc.low * scale) / scale;
  const double up = std::ceil(enc.up * scale) / scale;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "[%.*f, %.*f]", decimals, low, decimals, up);
  return buf;
}

}  // namespace quadspec
