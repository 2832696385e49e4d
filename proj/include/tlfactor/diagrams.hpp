#pragma once

#include <map>
#include <string>
#include <vector>

#include "tlfactor/polynomial.hpp"

namespace tlf {

/// A noncrossing color-respecting perfect matching of the points of a
/// boundary word. partner[i] == j means points i and j are joined; the word
/// itself is carried alongside (colors of paired points agree).
using Matching = std::vector<int>;

/// Reverses a word, giving the bar involution on boundary words. All colors
/// are self-dual here, so bar is plain reversal.
inline std::string bar(const std::string& word) {
  return std::string(word.rbegin(), word.rend());
}

/// All noncrossing color-respecting perfect matchings of `word`.
/// Count for a single color of length 2n is the n-th Catalan number.
std::vector<Matching> enumerate_ctl(const std::string& word);

/// A box diagram with a bottom word and a top word: pairs among
/// bottom points (indices 0..|bottom|), top points stored as
/// |bottom| + i. Used for Epi(CTL) boxes.
struct BoxDiagram {
  std::string bottom;
  std::string top;
  Matching pairing;  // over |bottom|+|top| points
};

/// All CTL boxes bottom -> top in which every top point is connected through
/// to a bottom point; bottom-to-bottom cups are allowed, top-to-top arcs are
/// not.
std::vector<BoxDiagram> epi_ctl(const std::string& bottom,
                                const std::string& top);

/// Element of the graded algebra Gr_0 / F_0 over the colored TL planar
/// algebra: per boundary word, a finitely supported map from matchings to
/// loop polynomials. Zero coefficients are pruned.
class TLElement {
 public:
  using WordComponent = std::map<Matching, LoopPoly>;

  TLElement() = default;

  static TLElement unit() {
    TLElement e;
    e.add("", Matching{}, LoopPoly::one());
    return e;
  }
  static TLElement diagram(const std::string& word, const Matching& m,
                           const LoopPoly& coeff = LoopPoly::one()) {
    TLElement e;
    e.add(word, m, coeff);
    return e;
  }

  bool is_zero() const { return comps_.empty(); }
  const std::map<std::string, WordComponent>& components() const {
    return comps_;
  }

  void add(const std::string& word, const Matching& m, const LoopPoly& coeff) {
    if (coeff.is_zero()) return;
    auto& slot = comps_[word][m];
    slot += coeff;
    if (slot.is_zero()) {
      comps_[word].erase(m);
      if (comps_[word].empty()) comps_.erase(word);
    }
  }

  LoopPoly coefficient(const std::string& word, const Matching& m) const {
    auto it = comps_.find(word);
    if (it == comps_.end()) return LoopPoly();
    auto jt = it->second.find(m);
    return jt == it->second.end() ? LoopPoly() : jt->second;
  }

  friend TLElement operator+(const TLElement& x, const TLElement& y) {
    TLElement r = x;
    for (const auto& [w, comp] : y.comps_)
      for (const auto& [m, c] : comp) r.add(w, m, c);
    return r;
  }
  friend TLElement operator-(const TLElement& x, const TLElement& y) {
    TLElement r = x;
    for (const auto& [w, comp] : y.comps_)
      for (const auto& [m, c] : comp) r.add(w, m, LoopPoly() - c);
    return r;
  }
  friend bool operator==(const TLElement& x, const TLElement& y) {
    return x.comps_ == y.comps_;
  }
  friend bool operator!=(const TLElement& x, const TLElement& y) {
    return !(x == y);
  }

 private:
  std::map<std::string, WordComponent> comps_;
};

/// Concatenation product on Gr_0: side-by-side juxtaposition, no loops made.
TLElement wedge(const TLElement& x, const TLElement& y);

/// Orthogonalized product on F_0: sum over nested contractions of x's word
/// suffix against y's word prefix; closed loops become delta factors and
/// color-mismatched splittings vanish.
TLElement star(const TLElement& x, const TLElement& y);

/// The * involution: reflect each diagram and reverse its boundary word.
TLElement involution(const TLElement& x);

/// Trace on Gr_0: cap each component with the sum of all CTL closures and
/// collect loop polynomials.
LoopPoly trace_wedge(const TLElement& x);

/// Trace on F_0: the coefficient of the empty diagram.
LoopPoly trace_star(const TLElement& x);

/// The orthogonalization map Gr_0 -> F_0: stack every Epi(CTL) box on top of
/// each component. Output is graded by the exposed top word.
TLElement phi(const TLElement& x);

/// Inverse of phi by back-substitution along decreasing word length.
TLElement phi_inverse(const TLElement& y);

/// Gram matrix of <x,y> = trace_star(x * y^*) over the enumerate_ctl(word)
/// basis, evaluated at the given loop parameters. Row-major, n x n.
/// Assembly is OpenMP-parallel when enabled; gram_matrix_serial is the
/// reference kept for testing.
std::vector<double> gram_matrix(const std::string& word,
                                const std::map<char, double>& delta);
std::vector<double> gram_matrix_serial(const std::string& word,
                                       const std::map<char, double>& delta);

/// Smallest eigenvalue of a symmetric matrix given row-major; empty -> 0.
double smallest_eigenvalue(const std::vector<double>& sym, int n);

/// Textual form "word:(0 3)(1 2)" used by the CLI.
std::string diagram_to_string(const std::string& word, const Matching& m);

}  // namespace tlf
