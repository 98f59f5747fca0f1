#include "quadspec/assembly.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "quadspec/errors.hpp"
#include "quadspec/lapack.hpp"
#include "quadspec/quadrature.hpp"

namespace quadspec {
namespace {

// Local shapes on one element: 0 = value-left, 1 = slope-left, 2 = value-right,
// 3 = slope-right. Shape s belongs to node (element + s/2).
int shape_node(int element, int s) { return element + s / 2; }

DofKind shape_kind(int s) { return (s % 2 == 0) ? DofKind::Value : DofKind::Derivative; }

int local_shape_of(const Dof& dof, int element) {
  // -1 when the DOF has no shape on this element.
  const int base = (dof.kind == DofKind::Value) ? 0 : 1;
  if (dof.node == element) return base;
  if (dof.node == element + 1) return base + 2;
  return -1;
}

struct ElementTables {
  int npts = 0;
  std::vector<long double> t, w;                    // points and weights on [0, h]
  std::array<std::vector<long double>, 4> phi, dphi, d2phi;
};

// Pairwise tree reduction (eight-way unroll, recursive halving above 128
// terms). Keeps the reduction error at O(log n) ulps instead of O(n) and gives
// a fixed, platform-independent summation order.
long double pairwise_sum(const long double* a, int n) {
  if (n < 8) {
    long double res = 0.0L;
    for (int i = 0; i < n; ++i) res += a[i];
    return res;
  }
  if (n <= 128) {
    long double r0 = a[0], r1 = a[1], r2 = a[2], r3 = a[3];
    long double r4 = a[4], r5 = a[5], r6 = a[6], r7 = a[7];
    int i = 8;
    for (; i < n - (n % 8); i += 8) {
      r0 += a[i];
      r1 += a[i + 1];
      r2 += a[i + 2];
      r3 += a[i + 3];
      r4 += a[i + 4];
      r5 += a[i + 5];
      r6 += a[i + 6];
      r7 += a[i + 7];
    }
    long double res = ((r0 + r1) + (r2 + r3)) + ((r4 + r5) + (r6 + r7));
    for (; i < n; ++i) res += a[i];
    return res;
  }
  int half = n / 2;
  half -= half % 8;
  return pairwise_sum(a, half) + pairwise_sum(a + half, n - half);
}

ElementTables element_tables(long double h, int npts) {
  const QuadratureRule& rule = gauss_legendre(npts);
  ElementTables tab;
  tab.npts = npts;
  tab.t.resize(npts);
  tab.w.resize(npts);
  const long double half = h / 2;
  for (int i = 0; i < npts; ++i) {
    tab.t[i] = (static_cast<long double>(rule.points[i]) + 1) * half;
    tab.w[i] = static_cast<long double>(rule.weights[i]) * half;
  }
  for (int s = 0; s < 4; ++s) {
    tab.phi[s].resize(npts);
    tab.dphi[s].resize(npts);
    tab.d2phi[s].resize(npts);
    for (int i = 0; i < npts; ++i) {
      tab.phi[s][i] = shape_on_element<long double>(h, s, tab.t[i], 0);
      tab.dphi[s][i] = shape_on_element<long double>(h, s, tab.t[i], 1);
      tab.d2phi[s][i] = shape_on_element<long double>(h, s, tab.t[i], 2);
    }
  }
  return tab;
}

}  // namespace

static double moment_quadrature(const Mesh& mesh, const Dof& dof_a, const Dof& dof_b, int deriv_a,
                                int deriv_b, int m, bool absolute) {
  if (deriv_a < 0 || deriv_a > 2 || deriv_b < 0 || deriv_b > 2) {
    throw InvalidArgument("local_moment: derivative orders must lie in {0, 1, 2}");
  }
  if (m < 0 || m > 8) {
    throw InvalidArgument("local_moment: moment power must lie in 0..8, got " + std::to_string(m));
  }
  const int n = mesh.spec.n;
  for (const Dof* d : {&dof_a, &dof_b}) {
    if (d->node < 0 || d->node > n) throw InvalidArgument("local_moment: node index out of range");
    if (d->kind == DofKind::Value && (d->node == 0 || d->node == n)) {
      throw InvalidArgument("local_moment: boundary Value DOF does not exist");
    }
  }
  const long double h = (static_cast<long double>(mesh.spec.L) + mesh.spec.L) / n;
  const QuadratureRule& rule = gauss_legendre(8);
  long double total = 0.0L;
  const int e_lo = std::max({0, dof_a.node - 1, dof_b.node - 1});
  const int e_hi = std::min({n - 1, dof_a.node, dof_b.node});
  for (int e = e_lo; e <= e_hi; ++e) {
    const int sa = local_shape_of(dof_a, e);
    const int sb = local_shape_of(dof_b, e);
    const long double xl = -static_cast<long double>(mesh.spec.L) + e * h;
    for (int i = 0; i < rule.npts; ++i) {
      const long double t = (static_cast<long double>(rule.points[i]) + 1) * (h / 2);
      const long double w = static_cast<long double>(rule.weights[i]) * (h / 2);
      long double xm = 1.0L;
      const long double x = xl + t;
      for (int k = 0; k < m; ++k) xm *= x;
      const long double term = w * shape_on_element<long double>(h, sa, t, deriv_a) * xm *
                               shape_on_element<long double>(h, sb, t, deriv_b);
      total += absolute ? std::abs(term) : term;
    }
  }
  return static_cast<double>(total);
}

double local_moment(const Mesh& mesh, const Dof& dof_a, const Dof& dof_b, int deriv_a,
                    int deriv_b, int m) {
  return moment_quadrature(mesh, dof_a, dof_b, deriv_a, deriv_b, m, false);
}

double local_moment_abs(const Mesh& mesh, const Dof& dof_a, const Dof& dof_b, int deriv_a,
                        int deriv_b, int m) {
  return moment_quadrature(mesh, dof_a, dof_b, deriv_a, deriv_b, m, true);
}

AssembledForms assemble_forms(const Mesh& mesh, const Potential& V, int npts) {
  const int n = mesh.spec.n;
  const int N = 2 * n;
  const DofTable table = build_dof_table(mesh);
  const int hbw = table.half_bandwidth;
  const long double h = (static_cast<long double>(mesh.spec.L) + mesh.spec.L) / n;
  if (npts <= 0) npts = std::max(8, V.degree() + 4);
  const ElementTables tab = element_tables(h, npts);

  // Extended-precision accumulators in the band layout; rounded once at the end.
  std::vector<long double> acc0(static_cast<size_t>(N) * (hbw + 1), 0.0L);
  std::vector<long double> acc1(acc0.size(), 0.0L);
  std::vector<long double> acc2(acc0.size(), 0.0L);
  std::vector<long double> Vq(tab.npts);
  std::vector<long double> q0(tab.npts), q1(tab.npts), q2(tab.npts);

  for (int e = 0; e < n; ++e) {
    const long double xl = -static_cast<long double>(mesh.spec.L) + e * h;
    for (int i = 0; i < tab.npts; ++i) Vq[i] = V.eval(xl + tab.t[i]);
    int gidx[4];
    for (int s = 0; s < 4; ++s) {
      gidx[s] = table.index({shape_kind(s), shape_node(e, s)});
    }
    for (int a = 0; a < 4; ++a) {
      const int ga = gidx[a];
      if (ga < 0) continue;
      for (int b = 0; b < 4; ++b) {
        const int gb = gidx[b];
        if (gb < 0 || ga < gb) continue;  // store the lower triangle once
        const size_t slot = static_cast<size_t>(gb) * (hbw + 1) + (ga - gb);
        // Fixed association order per point, then a pairwise tree reduction.
        // The per-run bit pattern is deterministic, and the lower triangle is
        // the single source of every entry, so symmetry is exact.
        for (int i = 0; i < tab.npts; ++i) {
          const long double pa = tab.phi[a][i], pb = tab.phi[b][i];
          const long double da = tab.dphi[a][i], db = tab.dphi[b][i];
          const long double ca = tab.d2phi[a][i], cb = tab.d2phi[b][i];
          const long double w = tab.w[i], v = Vq[i];
          q0[i] = (w * pa) * pb;
          q1[i] = w * ((da * db) + ((v * pa) * pb));
          q2[i] = w * (((ca * cb) - (v * ((ca * pb) + (pa * cb)))) + (((v * v) * pa) * pb));
        }
        acc0[slot] += pairwise_sum(q0.data(), tab.npts);
        acc1[slot] += pairwise_sum(q1.data(), tab.npts);
        acc2[slot] += pairwise_sum(q2.data(), tab.npts);
      }
    }
  }

  AssembledForms forms;
  forms.mesh = mesh;
  forms.potential = V;
  forms.A0 = SymBandMatrix(N, hbw);
  forms.A1 = SymBandMatrix(N, hbw);
  forms.A2 = SymBandMatrix(N, hbw);
  for (size_t i = 0; i < acc0.size(); ++i) {
    forms.A0.data[i] = static_cast<double>(acc0[i]);
    forms.A1.data[i] = static_cast<double>(acc1[i]);
    forms.A2.data[i] = static_cast<double>(acc2[i]);
  }

  try {
    lapack::cholesky_lower(forms.A0.to_dense());
  } catch (const SingularMass& err) {
    throw PositiveDefinitenessFailure(std::string("assemble_forms: Gram matrix failed its "
                                                  "positive definiteness check (") +
                                      err.what() + ")");
  }
  if (V.min_on(mesh.spec.L) < 0.0) {
    forms.warning = "potential dips below zero on [-L, L]; Galerkin values may not bound from above by positivity alone";
  }
  return forms;
}

}  // namespace quadspec
