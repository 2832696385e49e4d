#pragma once

#include <utility>
#include <vector>

namespace tlf {

/// Corner truncation of the rank-one perturbed shift
/// y = s + s* - delta^{-1/2} e_0 acting on l^2(N).
struct PerturbedShift {
  double delta = 2.0;  // must exceed 1
  int size = 2;        // truncation dimension, at least 2
};

struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;  // size diag.size() - 1
};

/// Truncated matrix: off-diagonals 1, diagonal 0 except entry (0,0) which is
/// -delta^{-1/2}.
Tridiagonal build_matrix(const PerturbedShift& p);

/// All eigenvalues of a symmetric tridiagonal matrix, ascending, via Sturm
/// bisection. The parallel version splits eigenvalue indices across OpenMP
/// threads; the serial version is the reference kept for testing.
std::vector<double> tridiag_eigenvalues(const Tridiagonal& t);
std::vector<double> tridiag_eigenvalues_serial(const Tridiagonal& t);

/// Extreme eigenvalues of the truncation, accurate to 1e-8. Both lie in
/// [-2, 2] for every delta > 1: the truncation is a compression of a
/// self-adjoint operator of norm 2.
std::pair<double, double> spectrum_bounds(const PerturbedShift& p);

/// Coefficient vectors (ascending powers) of the orthogonal polynomial
/// sequence p_0 = 1, p_1 = x + delta^{-1/2}, p_{n+2} = x p_{n+1} - p_n.
std::vector<std::vector<double>> poly_sequence(double delta, int n_max);

/// || p_n(Y) e_0 - e_n || on the truncation; zero in exact arithmetic for
/// n < N. Throws when n >= N.
double verify_cyclic(const PerturbedShift& p, int n);

/// Histogram of eigenvalue counts over [lo, hi) in `buckets` equal bins.
std::vector<int> spectrum_histogram(const std::vector<double>& eigs,
                                    double lo, double hi, int buckets);

}  // namespace tlf
