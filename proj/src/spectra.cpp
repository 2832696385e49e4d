#include "tlfactor/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tlf {

namespace {

void check(const PerturbedShift& p) {
  if (!(p.delta > 1.0)) throw std::domain_error("delta must exceed 1");
  if (p.size < 2) throw std::domain_error("truncation size must be >= 2");
}

// Number of eigenvalues of (diag, off) strictly below x, by the Sturm/LDL
// sign-count recurrence with the usual underflow guard.
int count_below(const Tridiagonal& t, double x) {
  const double tiny = 1e-300;
  int n = static_cast<int>(t.diag.size());
  int count = 0;
  double d = t.diag[0] - x;
  if (d < 0) ++count;
  for (int i = 1; i < n; ++i) {
    if (std::abs(d) < tiny) d = (d < 0 ? -tiny : tiny);
    d = t.diag[i] - x - t.off[i - 1] * t.off[i - 1] / d;
    if (d < 0) ++count;
  }
  return count;
}

// Gershgorin interval containing the whole spectrum.
std::pair<double, double> gershgorin(const Tridiagonal& t) {
  int n = static_cast<int>(t.diag.size());
  double lo = t.diag[0], hi = t.diag[0];
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.off[i - 1]);
    if (i + 1 < n) r += std::abs(t.off[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  return {lo, hi};
}

// k-th eigenvalue (ascending, 0-based) by bisection.
double eigenvalue_k(const Tridiagonal& t, int k, double lo, double hi) {
  for (int iter = 0; iter < 200 && hi - lo > 1e-13 * (1.0 + std::abs(hi));
       ++iter) {
    double mid = 0.5 * (lo + hi);
    if (count_below(t, mid) > k)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

Tridiagonal build_matrix(const PerturbedShift& p) {
  check(p);
  Tridiagonal t;
  t.diag.assign(p.size, 0.0);
  t.off.assign(p.size - 1, 1.0);
  t.diag[0] = -1.0 / std::sqrt(p.delta);
  return t;
}

std::vector<double> tridiag_eigenvalues_serial(const Tridiagonal& t) {
  int n = static_cast<int>(t.diag.size());
  auto [lo, hi] = gershgorin(t);
  std::vector<double> eigs(n);
  for (int k = 0; k < n; ++k) eigs[k] = eigenvalue_k(t, k, lo, hi);
  return eigs;
}

std::vector<double> tridiag_eigenvalues(const Tridiagonal& t) {
  int n = static_cast<int>(t.diag.size());
  auto [lo, hi] = gershgorin(t);
  std::vector<double> eigs(n);
#pragma omp parallel for schedule(static) if (n > 64)
  for (int k = 0; k < n; ++k) eigs[k] = eigenvalue_k(t, k, lo, hi);
  return eigs;
}

std::pair<double, double> spectrum_bounds(const PerturbedShift& p) {
  Tridiagonal t = build_matrix(p);
  auto [lo, hi] = gershgorin(t);
  int n = p.size;
  return {eigenvalue_k(t, 0, lo, hi), eigenvalue_k(t, n - 1, lo, hi)};
}

std::vector<std::vector<double>> poly_sequence(double delta, int n_max) {
  if (!(delta > 1.0)) throw std::domain_error("delta must exceed 1");
  if (n_max < 0) throw std::domain_error("n_max must be nonnegative");
  std::vector<std::vector<double>> p;
  p.push_back({1.0});
  if (n_max == 0) return p;
  p.push_back({1.0 / std::sqrt(delta), 1.0});
  for (int n = 2; n <= n_max; ++n) {
    // p_n = x p_{n-1} - p_{n-2}
    std::vector<double> next(n + 1, 0.0);
    for (int i = 0; i < n; ++i) next[i + 1] += p[n - 1][i];
    for (int i = 0; i < static_cast<int>(p[n - 2].size()); ++i)
      next[i] -= p[n - 2][i];
    p.push_back(std::move(next));
  }
  return p;
}

double verify_cyclic(const PerturbedShift& p, int n) {
  check(p);
  if (n >= p.size) throw std::domain_error("truncation too small");
  Tridiagonal t = build_matrix(p);
  int N = p.size;
  auto apply = [&](const std::vector<double>& v) {
    std::vector<double> out(N, 0.0);
    for (int i = 0; i < N; ++i) {
      out[i] = t.diag[i] * v[i];
      if (i > 0) out[i] += t.off[i - 1] * v[i - 1];
      if (i + 1 < N) out[i] += t.off[i] * v[i + 1];
    }
    return out;
  };

  // p_n(Y) e_0 via the three-term recurrence on vectors
  std::vector<double> prev(N, 0.0), cur(N, 0.0);
  prev[0] = 1.0;  // p_0(Y) e_0
  if (n == 0) {
    cur = prev;
  } else {
    cur = apply(prev);
    cur[0] += 1.0 / std::sqrt(p.delta);  // p_1 = x + delta^{-1/2}
    for (int k = 2; k <= n; ++k) {
      std::vector<double> next = apply(cur);
      for (int i = 0; i < N; ++i) next[i] -= prev[i];
      prev.swap(cur);
      cur.swap(next);
    }
  }
  double dev2 = 0.0;
  for (int i = 0; i < N; ++i) {
    double want = (i == n) ? 1.0 : 0.0;
    dev2 += (cur[i] - want) * (cur[i] - want);
  }
  return std::sqrt(dev2);
}

std::vector<int> spectrum_histogram(const std::vector<double>& eigs,
                                    double lo, double hi, int buckets) {
  std::vector<int> h(buckets, 0);
  for (double e : eigs) {
    if (e < lo || e >= hi) continue;
    int b = static_cast<int>((e - lo) / (hi - lo) * buckets);
    if (b >= 0 && b < buckets) ++h[b];
  }
  return h;
}

}  // namespace tlf
