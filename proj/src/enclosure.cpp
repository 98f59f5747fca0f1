#include "quadspec/enclosure.hpp"

#include <algorithm>
#include <cmath>

#include "quadspec/errors.hpp"

namespace quadspec {

PairingResult pair_conjugates(const std::vector<SecondOrderPoint>& points, double tol) {
  if (!(tol > 0)) throw InvalidArgument("pair_conjugates: tol must be positive");
  PairingResult result;
  std::vector<const SecondOrderPoint*> upper;
  std::vector<const SecondOrderPoint*> lower;
  for (const SecondOrderPoint& pt : points) {
    const double thresh = tol * (1.0 + std::abs(pt.z));
    if (std::abs(pt.z.imag()) <= thresh) {
      ConjugatePair pair;
      pair.mu = pt.z.imag() >= 0 ? pt.z : std::conj(pt.z);
      pair.source_residual = pt.residual;
      pair.self_paired = true;
      result.pairs.push_back(pair);
    } else if (pt.z.imag() > 0) {
      upper.push_back(&pt);
    } else {
      lower.push_back(&pt);
    }
  }

  std::vector<bool> taken(lower.size(), false);
  for (const SecondOrderPoint* up : upper) {
    int best = -1;
    double best_dist = 0.0;
    for (size_t k = 0; k < lower.size(); ++k) {
      if (taken[k]) continue;
      const double dist = std::abs(up->z - std::conj(lower[k]->z));
      if (best < 0 || dist < best_dist) {
        best = static_cast<int>(k);
        best_dist = dist;
      }
    }
    if (best >= 0 && best_dist <= tol * (1.0 + std::abs(up->z))) {
      taken[best] = true;
      ConjugatePair pair;
      pair.mu = up->z;
      pair.source_residual = std::max(up->residual, lower[best]->residual);
      result.pairs.push_back(pair);
    } else {
      result.unmatched.push_back(*up);
    }
  }
  for (size_t k = 0; k < lower.size(); ++k) {
    if (!taken[k]) result.unmatched.push_back(*lower[k]);
  }
  return result;
}

std::vector<Enclosure> make_enclosures(const std::vector<ConjugatePair>& pairs, Window window,
                                       double im_max, bool merge_overlaps) {
  if (!(im_max > 0)) throw InvalidArgument("make_enclosures: im_max must be positive");
  if (!(window.half_width > 0)) throw InvalidArgument("make_enclosures: window half_width must be positive");
  std::vector<Enclosure> out;
  for (const ConjugatePair& pair : pairs) {
    const double re = pair.mu.real();
    const double im = std::abs(pair.mu.imag());
    if (re < window.center - window.half_width || re > window.center + window.half_width) continue;
    if (im > im_max) continue;
    Enclosure enc;
    enc.mu = pair.mu;
    enc.low = re - im;
    enc.up = re + im;
    enc.width = enc.up - enc.low;
    enc.source_residual = pair.source_residual;
    out.push_back(enc);
  }
  std::sort(out.begin(), out.end(), [](const Enclosure& a, const Enclosure& b) {
    if (a.mu.real() != b.mu.real()) return a.mu.real() < b.mu.real();
    return a.mu.imag() < b.mu.imag();
  });
  if (merge_overlaps && out.size() > 1) {
    std::vector<Enclosure> merged;
    Enclosure cur = out.front();
    for (size_t k = 1; k < out.size(); ++k) {
      const Enclosure& next = out[k];
      if (next.low <= cur.up) {
        if (next.width < cur.width) cur.mu = next.mu;
        cur.low = std::min(cur.low, next.low);
        cur.up = std::max(cur.up, next.up);
        cur.width = cur.up - cur.low;
        cur.source_residual = std::max(cur.source_residual, next.source_residual);
      } else {
        merged.push_back(cur);
        cur = next;
      }
    }
    merged.push_back(cur);
    return merged;
  }
  return out;
}

}  // namespace quadspec
