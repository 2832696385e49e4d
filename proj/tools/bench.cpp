// Timing comparison of the OpenMP kernels against their serial references.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tlfactor/diagrams.hpp"
#include "tlfactor/spectra.hpp"

namespace {

template <class F>
double time_ms(F&& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serially\n");
#endif
  std::printf("%-34s %12s %12s %9s\n", "kernel", "serial (ms)", "openmp (ms)",
              "speedup");

  {
    std::string word(16, 'c');
    std::map<char, double> delta{{'c', 2.0}};
    std::vector<double> a, b;
    double ts = time_ms([&] { a = tlf::gram_matrix_serial(word, delta); });
    double tp = time_ms([&] { b = tlf::gram_matrix(word, delta); });
    double maxdiff = 0;
    for (size_t i = 0; i < a.size(); ++i)
      maxdiff = std::max(maxdiff, std::abs(a[i] - b[i]));
    std::printf("%-34s %12.1f %12.1f %8.2fx   (max diff %.1e)\n",
                "gram matrix, word c^16", ts, tp, ts / tp, maxdiff);
  }

  {
    tlf::PerturbedShift p{2.0, 4000};
    auto t = tlf::build_matrix(p);
    std::vector<double> a, b;
    double ts = time_ms([&] { a = tlf::tridiag_eigenvalues_serial(t); });
    double tp = time_ms([&] { b = tlf::tridiag_eigenvalues(t); });
    double maxdiff = 0;
    for (size_t i = 0; i < a.size(); ++i)
      maxdiff = std::max(maxdiff, std::abs(a[i] - b[i]));
    std::printf("%-34s %12.1f %12.1f %8.2fx   (max diff %.1e)\n",
                "tridiagonal eigenvalues, N=4000", ts, tp, ts / tp, maxdiff);
  }

  return 0;
}
