#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlfactor/fusion.hpp"
#include "tlfactor/graph.hpp"
#include "tlfactor/quadratic.hpp"

namespace tlf {

enum class BlockKind { InterpolatedFree, Matrix, DiffuseHyperfinite };

/// One summand of a finite von Neumann algebra decomposition. An atom is
/// Matrix(1). Markers name distinguished projections (p_<vertex>) together
/// with the sub-trace they carry inside this block.
template <class S>
struct VNBlock {
  BlockKind kind = BlockKind::Matrix;
  S trace = S(0);
  S param = S(0);      // t for InterpolatedFree
  int matrix_dim = 1;  // n for Matrix
  std::map<std::string, S> markers;
};

template <class S>
struct VNDecomposition {
  std::vector<VNBlock<S>> blocks;
  bool normalized = false;

  S total_trace() const {
    S t(0);
    for (const auto& b : blocks) t = t + b.trace;
    return t;
  }
};

template <class S>
S get_weight(const WeightedGraph& g, int v);
template <>
inline Quad get_weight<Quad>(const WeightedGraph& g, int v) {
  if (!g.exact) throw std::domain_error("graph weights are not exact");
  return g.vertices[v].weight;
}
template <>
inline double get_weight<double>(const WeightedGraph& g, int v) {
  return g.vertices[v].weight_f;
}

/// Dykema free dimension of a decomposition with normalized trace:
///   1 + sum c^2 (t - 1) over free blocks - sum c^2 / n^2 over matrix blocks.
/// Diffuse hyperfinite summands contribute zero. Calibrated so that
/// fdim(L(F_t)) = t and fdim of atoms with weights gamma is 1 - sum gamma^2.
template <class S>
S fdim(const VNDecomposition<S>& dec) {
  if (!dec.normalized)
    throw std::domain_error("free dimension needs a normalized trace");
  S out(1);
  for (const auto& b : dec.blocks) {
    switch (b.kind) {
      case BlockKind::InterpolatedFree:
        out = out + b.trace * b.trace * (b.param - S(1));
        break;
      case BlockKind::Matrix:
        out = out - b.trace * b.trace / S(b.matrix_dim * b.matrix_dim);
        break;
      case BlockKind::DiffuseHyperfinite:
        break;
    }
  }
  return out;
}

namespace detail {

template <class S>
std::vector<S> normalized_weights(const WeightedGraph& g) {
  std::vector<S> w(g.vertex_count());
  S total(0);
  for (int v = 0; v < g.vertex_count(); ++v) {
    w[v] = get_weight<S>(g, v);
    if (!(w[v] > S(0))) throw std::domain_error("vertex weights must be positive");
    total = total + w[v];
  }
  for (auto& x : w) x = x / total;
  return w;
}

/// alpha_v = sum_w n_{v,w} gamma_w; a loop of multiplicity m at v contributes
/// m * gamma_v once.
template <class S>
std::vector<S> neighbor_weight(const WeightedGraph& g,
                               const std::vector<S>& gamma) {
  std::vector<S> alpha(g.vertex_count(), S(0));
  for (const auto& e : g.edges) {
    if (e.v == e.w) {
      alpha[e.v] = alpha[e.v] + S(e.mult) * gamma[e.v];
    } else {
      alpha[e.v] = alpha[e.v] + S(e.mult) * gamma[e.w];
      alpha[e.w] = alpha[e.w] + S(e.mult) * gamma[e.v];
    }
  }
  return alpha;
}

}  // namespace detail

/// The edge algebra N_e inside the free product, for the edge record at
/// `edge_index` (a record of multiplicity m stands for m parallel edges; the
/// decomposition is that of a single one of them). Weights are normalized
/// first.
template <class S>
VNDecomposition<S> edge_algebra(const WeightedGraph& g, int edge_index) {
  const auto& e = g.edges.at(edge_index);
  auto gamma = detail::normalized_weights<S>(g);
  VNDecomposition<S> dec;
  dec.normalized = true;
  auto name = [&](int v) { return "p_" + g.vertices[v].name; };

  if (e.v == e.w) {
    // loop: L(Z) at the vertex, atoms elsewhere
    VNBlock<S> diff;
    diff.kind = BlockKind::DiffuseHyperfinite;
    diff.trace = gamma[e.v];
    diff.markers[name(e.v)] = gamma[e.v];
    dec.blocks.push_back(diff);
    for (int u = 0; u < g.vertex_count(); ++u) {
      if (u == e.v) continue;
      VNBlock<S> atom;
      atom.kind = BlockKind::Matrix;
      atom.matrix_dim = 1;
      atom.trace = gamma[u];
      atom.markers[name(u)] = gamma[u];
      dec.blocks.push_back(atom);
    }
    return dec;
  }

  int big = e.v, small = e.w;
  if (gamma[big] < gamma[small]) std::swap(big, small);
  // M_2 (x) L(Z) spanning both vertices, leftover atom at the heavier one
  VNBlock<S> diff;
  diff.kind = BlockKind::DiffuseHyperfinite;
  diff.trace = S(2) * gamma[small];
  diff.markers[name(small)] = gamma[small];
  diff.markers[name(big)] = gamma[small];
  dec.blocks.push_back(diff);
  if (gamma[big] > gamma[small]) {
    VNBlock<S> atom;
    atom.kind = BlockKind::Matrix;
    atom.matrix_dim = 1;
    atom.trace = gamma[big] - gamma[small];
    atom.markers[name(big)] = atom.trace;
    dec.blocks.push_back(atom);
  }
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (u == e.v || u == e.w) continue;
    VNBlock<S> atom;
    atom.kind = BlockKind::Matrix;
    atom.matrix_dim = 1;
    atom.trace = gamma[u];
    atom.markers[name(u)] = gamma[u];
    dec.blocks.push_back(atom);
  }
  return dec;
}

/// N(Gamma) for a connected weighted graph with at least two edges counted
/// with multiplicity: one interpolated free group factor plus an atom of
/// trace gamma_v - alpha_v for every v in B(Gamma). The parameter solves
/// free-dimension conservation over the amalgamated free product:
///   fdim(N(Gamma)) = sum_e fdim(N_e) - (|E| - 1) fdim(linf(Gamma)).
template <class S>
VNDecomposition<S> graph_algebra(const WeightedGraph& g) {
  if (!g.connected()) throw std::domain_error("graph must be connected");
  if (g.edge_count() < 2)
    throw std::domain_error("free product undefined at this size");
  auto gamma = detail::normalized_weights<S>(g);
  int nv = g.vertex_count();

  S sumsq(0);
  for (int v = 0; v < nv; ++v) sumsq = sumsq + gamma[v] * gamma[v];
  S fdim_base = S(1) - sumsq;  // fdim of linf(Gamma)

  S fdim_total(0);
  int edge_total = 0;
  for (const auto& e : g.edges) {
    S one;
    if (e.v == e.w) {
      one = S(1) - (sumsq - gamma[e.v] * gamma[e.v]);
    } else {
      S d = gamma[e.v] - gamma[e.w];
      if (d < S(0)) d = -(gamma[e.v] - gamma[e.w]);
      one = S(1) - d * d - (sumsq - gamma[e.v] * gamma[e.v] - gamma[e.w] * gamma[e.w]);
    }
    fdim_total = fdim_total + S(e.mult) * one;
    edge_total += e.mult;
  }
  fdim_total = fdim_total - S(edge_total - 1) * fdim_base;

  auto alpha = detail::neighbor_weight(g, gamma);
  VNDecomposition<S> dec;
  dec.normalized = true;
  S atom_sum(0), atom_sq(0);
  std::vector<S> atom(nv, S(0));
  for (int v = 0; v < nv; ++v) {
    if (gamma[v] > alpha[v]) {
      atom[v] = gamma[v] - alpha[v];
      atom_sum = atom_sum + atom[v];
      atom_sq = atom_sq + atom[v] * atom[v];
    }
  }
  S c = S(1) - atom_sum;
  S t = S(1) + (fdim_total - S(1) + atom_sq) / (c * c);

  VNBlock<S> factor;
  factor.kind = BlockKind::InterpolatedFree;
  factor.trace = c;
  factor.param = t;
  for (int v = 0; v < nv; ++v) {
    S share = gamma[v] - atom[v];
    if (!(share > S(0))) continue;
    factor.markers["p_" + g.vertices[v].name] = share;
  }
  dec.blocks.push_back(factor);
  for (int v = 0; v < nv; ++v) {
    if (atom[v] > S(0)) {
      VNBlock<S> a;
      a.kind = BlockKind::Matrix;
      a.matrix_dim = 1;
      a.trace = atom[v];
      a.markers["p_" + g.vertices[v].name] = atom[v];
      dec.blocks.push_back(a);
    }
  }
  return dec;
}

template <class S>
struct CompressResult {
  bool is_factor = false;
  S param = S(0);                // compressed t when is_factor
  VNDecomposition<S> induced;    // otherwise the induced sub-decomposition
};

/// Compression by the named projection. When the marker lives entirely in an
/// interpolated free group factor of trace c with marker trace beta, the
/// compressed corner is L(F_t') with t' = 1 + (t - 1)(c/beta)^2.
template <class S>
CompressResult<S> compress(const VNDecomposition<S>& dec,
                           const std::string& marker) {
  std::vector<int> holding;
  for (int i = 0; i < static_cast<int>(dec.blocks.size()); ++i)
    if (dec.blocks[i].markers.count(marker)) holding.push_back(i);
  if (holding.empty()) throw std::domain_error("marker not present: " + marker);

  CompressResult<S> out;
  if (holding.size() == 1 &&
      dec.blocks[holding[0]].kind == BlockKind::InterpolatedFree) {
    const auto& b = dec.blocks[holding[0]];
    S beta = b.markers.at(marker);
    S ratio = b.trace / beta;
    out.is_factor = true;
    out.param = S(1) + (b.param - S(1)) * ratio * ratio;
    return out;
  }
  out.is_factor = false;
  out.induced.normalized = false;
  for (int i : holding) {
    VNBlock<S> b = dec.blocks[i];
    S beta = b.markers.at(marker);
    if (b.kind == BlockKind::InterpolatedFree) {
      S ratio = b.trace / beta;
      b.param = S(1) + (b.param - S(1)) * ratio * ratio;
    }
    b.trace = beta;
    b.markers.clear();
    b.markers[marker] = beta;
    out.induced.blocks.push_back(b);
  }
  return out;
}

/// [M_alpha : M_0] = delta_alpha^2 for the Jones tower over a generator word.
template <class S>
S jones_index(const std::vector<S>& deltas) {
  S d(1);
  for (const auto& x : deltas) d = d * x;
  return d * d;
}

struct FactorReport {
  bool finite = true;
  bool exact = false;
  Quad t_exact;
  double t = 0.0;
  std::vector<Quad> growth_exact;  // per radius, when exact
  std::vector<double> growth;
  bool diverging = false;
  std::vector<std::string> warnings;
};

/// Identify the GJS factor of a finite fusion category: builds the fusion
/// graph, runs the graph calculus and compresses at the base vertex.
FactorReport identify_factor(const FusionRing& ring,
                             const std::vector<GeneratorObject>& generators);

/// Ball-subgraph growth diagnostic for a lazily generated infinite graph:
/// t_k on balls of radius 1..max_radius. The sequence is monotone by the
/// standard-embedding limit rule; `diverging` is set when it exceeds the
/// threshold or keeps growing past the bound for 5 consecutive radii.
struct GrowthOptions {
  int max_radius = 6;
  double threshold = 1e6;
  double bound = 100.0;
};

template <class BallFn>
FactorReport growth_diagnostic(BallFn&& ball_of_radius,
                               const GrowthOptions& opt) {
  FactorReport rep;
  rep.finite = false;
  rep.exact = true;
  int run = 0;
  double prev = 0.0;
  for (int k = 1; k <= opt.max_radius; ++k) {
    WeightedGraph g = ball_of_radius(k);
    auto dec = graph_algebra<Quad>(g);
    auto cmp = compress<Quad>(dec, "p_" + g.vertices[g.base].name);
    if (!cmp.is_factor)
      throw std::domain_error("base vertex carries an atom");
    rep.growth_exact.push_back(cmp.param);
    double t = cmp.param.to_double();
    rep.growth.push_back(t);
    run = (k > 1 && t > prev) ? run + 1 : 1;
    prev = t;
    if (t > opt.threshold || (run >= 5 && t > opt.bound)) rep.diverging = true;
  }
  if (!rep.growth.empty()) {
    rep.t = rep.growth.back();
    rep.t_exact = rep.growth_exact.back();
  }
  return rep;
}

/// Ball of radius k in the Cayley graph of the free group of the given rank
/// (reduced words, unit weights), with the generator family duplicated
/// `colors` times. This is the fusion graph of the bundled infinite example.
WeightedGraph free_group_ball(int rank, int colors, int radius);

/// t = 1 + dim(C)(2 dim(X) - 1) from the closed form of the finite theorem.
Quad closed_form_t_exact(const FusionRing& ring, int generator_simple);
double closed_form_t(const FusionRing& ring, int generator_simple);

/// s = 1 + dim(C)(dim(Y) - 1) for Y the sum of all simples.
Quad closed_form_s_exact(const FusionRing& ring);
double closed_form_s(const FusionRing& ring);

}  // namespace tlf
