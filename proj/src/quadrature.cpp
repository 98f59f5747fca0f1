#include "quadspec/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "quadspec/errors.hpp"

namespace quadspec {
namespace {

const double kNodes8[8][2] = {
    {-0.96028985649753618, 0.10122853629037669},
    {-0.79666647741362673, 0.22238103445337434},
    {-0.52553240991632899, 0.31370664587788705},
    {-0.18343464249564978, 0.36268378337836177},
    {0.18343464249564978, 0.36268378337836177},
    {0.52553240991632899, 0.31370664587788705},
    {0.79666647741362673, 0.22238103445337434},
    {0.96028985649753618, 0.10122853629037669},
};

// Legendre P_n and P_n' at x by the three-term recurrence.
void legendre(int n, double x, double* p, double* dp) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  *p = p1;
  *dp = n * (x * p1 - p0) / (x * x - 1.0);
}

QuadratureRule newton_rule(int npts) {
  QuadratureRule rule;
  rule.npts = npts;
  rule.points.resize(npts);
  rule.weights.resize(npts);
  for (int i = 0; i < npts; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n(x) = 0. The cosine
    // ordering makes the points come out ascending.
    double x = std::cos(M_PI * (npts - i - 0.25) / (npts + 0.5));
    double p = 0.0, dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      legendre(npts, x, &p, &dp);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre(npts, x, &p, &dp);
    rule.points[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const QuadratureRule& gauss_legendre(int npts) {
  if (npts < 1) throw InvalidArgument("gauss_legendre: need at least one point");
  static std::map<int, QuadratureRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(npts);
  if (it != cache.end()) return it->second;
  QuadratureRule rule;
  if (npts == 8) {
    rule.npts = 8;
    for (const auto& row : kNodes8) {
      rule.points.push_back(row[0]);
      rule.weights.push_back(row[1]);
    }
  } else {
    rule = newton_rule(npts);
  }
  return cache.emplace(npts, std::move(rule)).first->second;
}

}  // namespace quadspec
