#pragma once

#include <complex>
#include <vector>

#include "quadspec/pencil.hpp"

namespace quadspec {

// A matched conjugate pair of second-order points, represented by the member
// with nonnegative imaginary part. self_paired marks near-real points counted
// once. source_residual is the larger of the two members' residuals.
struct ConjugatePair {
  std::complex<double> mu;
  double source_residual = 0.0;
  bool self_paired = false;
};

struct PairingResult {
  std::vector<ConjugatePair> pairs;
  std::vector<SecondOrderPoint> unmatched;  // leftovers without a partner
};

// Maximal conjugate matching with relative tolerance tol (1 + |z|) per point:
// near-real points self-pair, the rest greedily match across the real axis by
// smallest |z - conj(z')|. Deterministic given the input order.
PairingResult pair_conjugates(const std::vector<SecondOrderPoint>& points, double tol = 1e-8);

struct Window {
  double center = 0.0;
  double half_width = 0.0;  // must be positive
};

// Certified interval [Re mu - |Im mu|, Re mu + |Im mu|]: it intersects the
// spectrum whenever mu lies in the second-order spectrum exactly. width and
// the endpoints are computed exactly as written, so low + up = 2 Re(mu) and
// up - low = 2 |Im(mu)| hold in floating point.
struct Enclosure {
  std::complex<double> mu;
  double low = 0.0;
  double up = 0.0;
  double width = 0.0;
  double source_residual = 0.0;
};

// Enclosures for the pairs with Re(mu) inside the window and |Im(mu)| at most
// im_max, sorted by Re(mu). Overlapping intervals are kept separate unless
// merge_overlaps is set, in which case each overlap group collapses to its
// hull with the narrowest member's mu.
std::vector<Enclosure> make_enclosures(const std::vector<ConjugatePair>& pairs, Window window,
                                       double im_max, bool merge_overlaps = false);

}  // namespace quadspec
