#include "tlfactor/diagrams.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tlf {

namespace {

// Matchings of word[lo..hi) with arcs above a line: point lo pairs with some
// mid of equal color splitting the rest into two independently matched
// intervals.
void enumerate_range(const std::string& word, int lo, int hi,
                     Matching& partial, std::vector<Matching>& out) {
  if (lo >= hi) {
    out.push_back(partial);
    return;
  }
  if ((hi - lo) % 2 != 0) return;
  for (int mid = lo + 1; mid < hi; mid += 2) {
    if (word[mid] != word[lo]) continue;
    partial[lo] = mid;
    partial[mid] = lo;
    // inner interval
    std::vector<Matching> inner;
    Matching inner_partial = partial;
    enumerate_range(word, lo + 1, mid, inner_partial, inner);
    for (auto& in : inner) {
      Matching next = in;
      enumerate_range(word, mid + 1, hi, next, out);
    }
  }
}

}  // namespace

std::vector<Matching> enumerate_ctl(const std::string& word) {
  int n = static_cast<int>(word.size());
  std::vector<Matching> out;
  if (n % 2 != 0) return out;
  Matching partial(n, -1);
  enumerate_range(word, 0, n, partial, out);
  return out;
}

namespace {

// Epi structures of a bottom word: role[p] = -1 for a through string,
// otherwise the partner of a bottom-to-bottom cup. Cup interiors are fully
// matched since an interior through string would cross the cup.
void enumerate_epi_structures(const std::string& word, int lo, int hi,
                              std::vector<int>& role,
                              std::vector<std::vector<int>>& out) {
  if (lo >= hi) {
    out.push_back(role);
    return;
  }
  // position lo goes through
  role[lo] = -1;
  enumerate_epi_structures(word, lo + 1, hi, role, out);
  // or opens a cup to mid with matched interior
  for (int mid = lo + 1; mid < hi; mid += 2) {
    if (word[mid] != word[lo]) continue;
    std::string interior = word.substr(lo + 1, mid - lo - 1);
    for (const auto& inner : enumerate_ctl(interior)) {
      role[lo] = mid;
      role[mid] = lo;
      for (int i = 0; i < static_cast<int>(inner.size()); ++i)
        role[lo + 1 + i] = lo + 1 + inner[i];
      enumerate_epi_structures(word, mid + 1, hi, role, out);
    }
  }
}

std::vector<std::vector<int>> epi_structures(const std::string& word) {
  std::vector<int> role(word.size(), -1);
  std::vector<std::vector<int>> out;
  enumerate_epi_structures(word, 0, static_cast<int>(word.size()), role, out);
  return out;
}

}  // namespace

std::vector<BoxDiagram> epi_ctl(const std::string& bottom,
                                const std::string& top) {
  std::vector<BoxDiagram> out;
  int nb = static_cast<int>(bottom.size());
  for (const auto& role : epi_structures(bottom)) {
    std::string exposed;
    std::vector<int> through_pos;
    for (int p = 0; p < nb; ++p) {
      if (role[p] == -1) {
        exposed += bottom[p];
        through_pos.push_back(p);
      }
    }
    if (exposed != top) continue;
    BoxDiagram box;
    box.bottom = bottom;
    box.top = top;
    box.pairing.assign(nb + top.size(), -1);
    for (int p = 0; p < nb; ++p)
      if (role[p] != -1) box.pairing[p] = role[p];
    for (int i = 0; i < static_cast<int>(through_pos.size()); ++i) {
      box.pairing[through_pos[i]] = nb + i;
      box.pairing[nb + i] = through_pos[i];
    }
    out.push_back(std::move(box));
  }
  return out;
}

TLElement wedge(const TLElement& x, const TLElement& y) {
  TLElement r;
  for (const auto& [wx, cx] : x.components()) {
    int shift = static_cast<int>(wx.size());
    for (const auto& [wy, cy] : y.components()) {
      std::string w = wx + wy;
      for (const auto& [mx, px] : cx) {
        for (const auto& [my, py] : cy) {
          Matching m = mx;
          m.reserve(mx.size() + my.size());
          for (int q : my) m.push_back(q + shift);
          r.add(w, m, px * py);
        }
      }
    }
  }
  return r;
}

namespace {

// One contraction term of the star product: glue the last k points of
// (wa, ma) to the first k points of (wb, mb) in nested fashion. Closed loops
// become delta factors of their color.
void star_contract(const std::string& wa, const Matching& ma,
                   const std::string& wb, const Matching& mb, int k,
                   const LoopPoly& coeff, TLElement& out) {
  int A = static_cast<int>(wa.size());
  int B = static_cast<int>(wb.size());
  // combined labels: a-points 0..A-1, b-points A..A+B-1
  auto match_of = [&](int p) {
    return p < A ? ma[p] : mb[p - A] + A;
  };
  auto glued = [&](int p) {
    return (p >= A - k && p < A) || (p >= A && p < A + k);
  };
  auto glue_partner = [&](int p) {
    // a-point A-k+i <-> b-point k-1-i
    if (p < A) return A + (k - 1 - (p - (A - k)));
    return (A - k) + (k - 1 - (p - A));
  };
  // new labels for surviving points
  auto new_label = [&](int p) {
    return p < A ? p : (A - k) + (p - A - k);
  };

  std::string w = wa.substr(0, A - k) + wb.substr(k);
  Matching m(w.size(), -1);
  std::vector<char> seen(A + B, 0);

  // paths between surviving points
  for (int p = 0; p < A + B; ++p) {
    if (glued(p) || seen[p]) continue;
    seen[p] = 1;
    int cur = match_of(p);
    while (glued(cur)) {
      seen[cur] = 1;
      cur = glue_partner(cur);
      seen[cur] = 1;
      cur = match_of(cur);
    }
    seen[cur] = 1;
    m[new_label(p)] = new_label(cur);
    m[new_label(cur)] = new_label(p);
  }
  // closed loops among glued points
  LoopPoly c = coeff;
  for (int p = A - k; p < A; ++p) {
    if (seen[p]) continue;
    char color = wa[p];
    int cur = p;
    while (!seen[cur]) {
      seen[cur] = 1;
      int q = match_of(cur);
      seen[q] = 1;
      cur = glue_partner(q);
    }
    c.mul_delta(color);
  }
  out.add(w, m, c);
}

}  // namespace

TLElement star(const TLElement& x, const TLElement& y) {
  TLElement r;
  for (const auto& [wa, ca] : x.components()) {
    int A = static_cast<int>(wa.size());
    for (const auto& [wb, cb] : y.components()) {
      int B = static_cast<int>(wb.size());
      int kmax = std::min(A, B);
      for (int k = 0; k <= kmax; ++k) {
        bool colors_match = true;
        for (int i = 0; i < k && colors_match; ++i)
          colors_match = (wa[A - k + i] == wb[k - 1 - i]);
        if (!colors_match) continue;
        for (const auto& [ma, pa] : ca)
          for (const auto& [mb, pb] : cb)
            star_contract(wa, ma, wb, mb, k, pa * pb, r);
      }
    }
  }
  return r;
}

TLElement involution(const TLElement& x) {
  TLElement r;
  for (const auto& [w, comp] : x.components()) {
    int n = static_cast<int>(w.size());
    std::string wr = bar(w);
    for (const auto& [m, c] : comp) {
      Matching mr(n, -1);
      for (int i = 0; i < n; ++i) mr[n - 1 - i] = n - 1 - m[i];
      r.add(wr, mr, c);  // rational coefficients: conjugation is identity
    }
  }
  return r;
}

namespace {

// delta monomial from the cycles of the union of two perfect matchings on
// the same word.
LoopPoly closure_monomial(const std::string& word, const Matching& a,
                          const Matching& b) {
  int n = static_cast<int>(word.size());
  std::vector<char> seen(n, 0);
  LoopPoly mono = LoopPoly::one();
  for (int p = 0; p < n; ++p) {
    if (seen[p]) continue;
    int cur = p;
    while (!seen[cur]) {
      seen[cur] = 1;
      int q = a[cur];
      seen[q] = 1;
      cur = b[q];
    }
    mono.mul_delta(word[p]);
  }
  return mono;
}

}  // namespace

LoopPoly trace_wedge(const TLElement& x) {
  LoopPoly total;
  for (const auto& [w, comp] : x.components()) {
    auto closures = enumerate_ctl(w);
    for (const auto& [m, c] : comp)
      for (const auto& e : closures) total += c * closure_monomial(w, m, e);
  }
  return total;
}

LoopPoly trace_star(const TLElement& x) {
  return x.coefficient("", Matching{});
}

TLElement phi(const TLElement& x) {
  TLElement r;
  for (const auto& [w, comp] : x.components()) {
    int n = static_cast<int>(w.size());
    for (const auto& role : epi_structures(w)) {
      std::string top;
      std::vector<int> topslot(n, -1);
      for (int p = 0; p < n; ++p) {
        if (role[p] == -1) {
          topslot[p] = static_cast<int>(top.size());
          top += w[p];
        }
      }
      for (const auto& [m, c] : comp) {
        // walk from each through position down through m and the cups
        Matching mt(top.size(), -1);
        std::vector<char> seen(n, 0);
        for (int p = 0; p < n; ++p) {
          if (role[p] != -1 || seen[p]) continue;
          seen[p] = 1;
          int cur = m[p];
          while (role[cur] != -1) {
            seen[cur] = 1;
            cur = role[cur];
            seen[cur] = 1;
            cur = m[cur];
          }
          seen[cur] = 1;
          mt[topslot[p]] = topslot[cur];
          mt[topslot[cur]] = topslot[p];
        }
        LoopPoly coeff = c;
        for (int p = 0; p < n; ++p) {
          if (seen[p] || role[p] == -1) continue;
          char color = w[p];
          int cur = p;
          while (!seen[cur]) {
            seen[cur] = 1;
            int q = m[cur];
            seen[q] = 1;
            cur = role[q];
          }
          coeff.mul_delta(color);
        }
        r.add(top, mt, coeff);
      }
    }
  }
  return r;
}

TLElement phi_inverse(const TLElement& y) {
  TLElement x;
  TLElement residual = y;
  while (!residual.is_zero()) {
    size_t longest = 0;
    for (const auto& [w, comp] : residual.components())
      longest = std::max(longest, w.size());
    TLElement slice;
    for (const auto& [w, comp] : residual.components())
      if (w.size() == longest)
        for (const auto& [m, c] : comp) slice.add(w, m, c);
    x = x + slice;
    residual = residual - phi(slice);
  }
  return x;
}

namespace {

double gram_entry(const std::string& word, const Matching& a,
                  const Matching& b, const std::map<char, double>& delta) {
  // trace_star(x * y^*) for single diagrams reduces to the loop count of the
  // union of the two matchings.
  int n = static_cast<int>(word.size());
  std::vector<char> seen(n, 0);
  double v = 1.0;
  for (int p = 0; p < n; ++p) {
    if (seen[p]) continue;
    int cur = p;
    while (!seen[cur]) {
      seen[cur] = 1;
      int q = a[cur];
      seen[q] = 1;
      cur = b[q];
    }
    v *= delta.at(word[p]);
  }
  return v;
}

}  // namespace

std::vector<double> gram_matrix_serial(const std::string& word,
                                       const std::map<char, double>& delta) {
  for (const auto& [c, d] : delta)
    if (d <= 1.0) throw std::domain_error("loop parameter must exceed 1");
  auto basis = enumerate_ctl(word);
  int n = static_cast<int>(basis.size());
  std::vector<double> g(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      double v = gram_entry(word, basis[i], basis[j], delta);
      g[static_cast<size_t>(i) * n + j] = v;
      g[static_cast<size_t>(j) * n + i] = v;
    }
  return g;
}

std::vector<double> gram_matrix(const std::string& word,
                                const std::map<char, double>& delta) {
  for (const auto& [c, d] : delta)
    if (d <= 1.0) throw std::domain_error("loop parameter must exceed 1");
  auto basis = enumerate_ctl(word);
  int n = static_cast<int>(basis.size());
  std::vector<double> g(static_cast<size_t>(n) * n, 0.0);
#pragma omp parallel for schedule(dynamic) if (n > 16)
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double v = gram_entry(word, basis[i], basis[j], delta);
      g[static_cast<size_t>(i) * n + j] = v;
      g[static_cast<size_t>(j) * n + i] = v;
    }
  }
  return g;
}

double smallest_eigenvalue(const std::vector<double>& sym, int n) {
  if (n == 0) return 0.0;
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = sym[static_cast<size_t>(i) * n + j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m,
                                                        Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

std::string diagram_to_string(const std::string& word, const Matching& m) {
  std::string s = word + ":";
  for (int i = 0; i < static_cast<int>(m.size()); ++i) {
    if (m[i] > i)
      s += "(" + std::to_string(i) + " " + std::to_string(m[i]) + ")";
  }
  return s;
}

}  // namespace tlf
