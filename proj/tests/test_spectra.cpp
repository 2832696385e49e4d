#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "tlfactor/spectra.hpp"

using namespace tlf;

TEST_CASE("matrix construction") {
  auto t = build_matrix({4.0, 2});
  CHECK(t.diag == std::vector<double>{-0.5, 0.0});
  CHECK(t.off == std::vector<double>{1.0});

  auto t3 = build_matrix({4.0, 3});
  CHECK(t3.diag == std::vector<double>{-0.5, 0.0, 0.0});
  CHECK(t3.off == std::vector<double>{1.0, 1.0});

  // large delta approaches the unperturbed truncation entrywise
  auto big = build_matrix({1e18, 4});
  CHECK(std::abs(big.diag[0]) < 1e-8);

  CHECK_THROWS_AS(build_matrix({1.0, 10}), std::domain_error);
  CHECK_THROWS_AS(build_matrix({0.5, 10}), std::domain_error);
  CHECK_THROWS_AS(build_matrix({4.0, 1}), std::domain_error);
}

TEST_CASE("unperturbed truncation has the closed-form spectrum") {
  // s + s* truncated to N: eigenvalues 2 cos(k pi / (N+1))
  int n = 5;
  Tridiagonal t;
  t.diag.assign(n, 0.0);
  t.off.assign(n - 1, 1.0);
  auto eigs = tridiag_eigenvalues(t);
  for (int k = 0; k < n; ++k) {
    double expect = 2.0 * std::cos((n - k) * M_PI / (n + 1));
    CHECK(eigs[k] == doctest::Approx(expect).epsilon(1e-10));
  }
  CHECK(eigs.back() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));
  CHECK(eigs.front() == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-10));
}

TEST_CASE("bisection agrees with a dense eigensolver") {
  auto t = build_matrix({2.0, 400});
  auto eigs = tridiag_eigenvalues(t);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(400, 400);
  for (int i = 0; i < 400; ++i) {
    m(i, i) = t.diag[i];
    if (i + 1 < 400) m(i, i + 1) = m(i + 1, i) = t.off[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m,
                                                        Eigen::EigenvaluesOnly);
  for (int i = 0; i < 400; ++i)
    CHECK(eigs[i] == doctest::Approx(solver.eigenvalues()[i]).epsilon(1e-9));
}

TEST_CASE("parallel and serial eigenvalue kernels match exactly") {
  auto t = build_matrix({1.21, 800});
  CHECK(tridiag_eigenvalues(t) == tridiag_eigenvalues_serial(t));
}

TEST_CASE("every truncation eigenvalue lies in [-2, 2] across the delta grid") {
  for (double delta : {1.1, 1.21, 2.0, 4.0, 100.0}) {
    PerturbedShift p{delta, 1000};
    auto [lo, hi] = spectrum_bounds(p);
    INFO("delta = " << delta);
    CHECK(lo >= -2.0);
    CHECK(hi <= 2.0);
  }
}

TEST_CASE("eigenvalue histogram stabilizes as the truncation doubles") {
  PerturbedShift p1{2.0, 1000}, p2{2.0, 2000};
  auto e1 = tridiag_eigenvalues(build_matrix(p1));
  auto e2 = tridiag_eigenvalues(build_matrix(p2));
  int buckets = 8;
  auto h1 = spectrum_histogram(e1, -2.0, 2.0, buckets);
  auto h2 = spectrum_histogram(e2, -2.0, 2.0, buckets);
  for (int b = 0; b < buckets; ++b) {
    double f1 = double(h1[b]) / e1.size();
    double f2 = double(h2[b]) / e2.size();
    CHECK(std::abs(f1 - f2) < 2e-2);
  }
}

TEST_CASE("no outlier separates from the band edge") {
  for (double delta : {1.21, 4.0}) {
    auto [lo1, hi1] = spectrum_bounds({delta, 500});
    auto [lo2, hi2] = spectrum_bounds({delta, 1000});
    CHECK(2.0 - hi1 < 1e-4);
    CHECK(2.0 - hi2 < 2.0 - hi1);  // edge gap shrinks with N
    CHECK(lo1 + 2.0 < 1e-4);
  }
}

TEST_CASE("orthogonal polynomial sequence") {
  auto p = poly_sequence(4.0, 20);
  CHECK(p[0] == std::vector<double>{1.0});
  CHECK(p[1] == std::vector<double>{0.5, 1.0});
  // p_2 = x^2 + delta^{-1/2} x - 1
  CHECK(p[2] == std::vector<double>{-1.0, 0.5, 1.0});
  for (int n = 0; n <= 20; ++n) {
    CHECK(static_cast<int>(p[n].size()) == n + 1);
    CHECK(p[n].back() == 1.0);  // monic
  }
}

TEST_CASE("p_n(Y) e_0 = e_n on the truncation") {
  CHECK(verify_cyclic({4.0, 50}, 0) == 0.0);
  CHECK(verify_cyclic({4.0, 50}, 1) == 0.0);
  for (int n : {5, 10, 20}) {
    CHECK(verify_cyclic({2.0, 100}, n) <= 1e-10);
    CHECK(verify_cyclic({1.21, 100}, n) <= 1e-10);
  }
  // holds right up to the truncation edge
  CHECK(verify_cyclic({2.0, 30}, 29) <= 1e-10);
  CHECK_THROWS_WITH_AS(verify_cyclic({2.0, 30}, 30), "truncation too small",
                       std::domain_error);
}
