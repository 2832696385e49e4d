#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlfactor/diagrams.hpp"
#include "tlfactor/graph.hpp"
#include "tlfactor/vnfactor.hpp"

namespace tlf {

/// Commutative base algebra over the vertices of a weighted graph, with the
/// covariance maps eta_c read off the colored adjacency: eta_c(f)(v) =
/// sum_w n^c_{v,w} f(w), a loop of multiplicity m at v contributing m f(v)
/// once. Tr(f) = sum_v f(v) gamma_v.
template <class S>
class MomentContext {
 public:
  explicit MomentContext(const WeightedGraph& g) : graph_(g) {
    int nv = g.vertex_count();
    gamma_.resize(nv);
    for (int v = 0; v < nv; ++v) gamma_[v] = get_weight<S>(g, v);
    for (const auto& e : g.edges) {
      auto& m = adj_[e.color];
      if (m.empty()) m.assign(nv, std::vector<long long>(nv, 0));
      if (e.v == e.w) {
        m[e.v][e.v] += e.mult;
      } else {
        m[e.v][e.w] += e.mult;
        m[e.w][e.v] += e.mult;
      }
    }
  }

  const WeightedGraph& graph() const { return graph_; }
  int vertex_count() const { return static_cast<int>(gamma_.size()); }
  const std::vector<S>& gamma() const { return gamma_; }

  std::vector<S> unit() const { return std::vector<S>(vertex_count(), S(1)); }
  std::vector<S> indicator(int v) const {
    std::vector<S> f(vertex_count(), S(0));
    f.at(v) = S(1);
    return f;
  }

  bool has_color(char c) const { return adj_.count(c) > 0; }

  long long adjacency(char c, int v, int w) const {
    auto it = adj_.find(c);
    return it == adj_.end() ? 0 : it->second[v][w];
  }

  std::vector<S> eta(char c, const std::vector<S>& f) const {
    auto it = adj_.find(c);
    std::vector<S> out(vertex_count(), S(0));
    if (it == adj_.end()) return out;
    for (int v = 0; v < vertex_count(); ++v)
      for (int w = 0; w < vertex_count(); ++w)
        if (it->second[v][w] != 0)
          out[v] = out[v] + S(it->second[v][w]) * f[w];
    return out;
  }

  S trace(const std::vector<S>& f) const {
    S t(0);
    for (int v = 0; v < vertex_count(); ++v) t = t + f[v] * gamma_[v];
    return t;
  }

 private:
  WeightedGraph graph_;
  std::vector<S> gamma_;
  std::map<char, std::vector<std::vector<long long>>> adj_;
};

/// Alternating word y_0 X_{c_1} y_1 ... X_{c_n} y_n: n colors and n+1 base
/// algebra vectors.
template <class S>
struct MomentWord {
  std::vector<std::vector<S>> y;
  std::string colors;

  void validate(int nv) const {
    if (y.size() != colors.size() + 1)
      throw std::domain_error("moment word needs n+1 base vectors");
    for (const auto& f : y)
      if (static_cast<int>(f.size()) != nv)
        throw std::domain_error("base vector has wrong dimension");
  }
};

namespace detail {

template <class S>
std::vector<S> pointwise(const std::vector<S>& a, const std::vector<S>& b) {
  std::vector<S> out(a.size(), S(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

}  // namespace detail

/// E(y_0 X_{c_1} ... X_{c_n} y_n) by the moment recurrence: the first letter
/// pairs with a matching letter k and
///   E = sum_k y_0 eta_{c_1}(E(inner)) E(outer),
/// off-diagonal eta_{a,b} (a != b) vanishing. Memoized on subword spans;
/// odd n gives zero.
template <class S>
std::vector<S> expect(const MomentContext<S>& ctx, const MomentWord<S>& word) {
  word.validate(ctx.vertex_count());
  int n = static_cast<int>(word.colors.size());
  // memo over spans (i, j): E(y_i X_{c_{i+1}} ... X_{c_j} y_j)
  std::map<std::pair<int, int>, std::vector<S>> memo;

  std::function<const std::vector<S>&(int, int)> span =
      [&](int i, int j) -> const std::vector<S>& {
    auto key = std::make_pair(i, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<S> value(ctx.vertex_count(), S(0));
    if (i == j) {
      value = word.y[i];
    } else if ((j - i) % 2 == 0) {
      char c1 = word.colors[i];  // letter i+1 in 1-based terms
      for (int k = i + 1; k <= j; ++k) {
        if (word.colors[k - 1] != c1) continue;
        const auto inner = span(i + 1, k - 1);
        const auto outer = span(k, j);
        auto term = detail::pointwise(word.y[i], ctx.eta(c1, inner));
        term = detail::pointwise(term, outer);
        for (int v = 0; v < ctx.vertex_count(); ++v)
          value[v] = value[v] + term[v];
      }
    }
    return memo.emplace(key, std::move(value)).first->second;
  };
  return span(0, n);
}

/// Independent oracle for expect: direct sum over noncrossing color-matched
/// pairings of the generator letters, each evaluated by nested eta
/// applications with interleaved base products.
template <class S>
std::vector<S> pairing_expect(const MomentContext<S>& ctx,
                              const MomentWord<S>& word) {
  word.validate(ctx.vertex_count());
  int n = static_cast<int>(word.colors.size());
  std::vector<S> total(ctx.vertex_count(), S(0));
  for (const auto& pairing : enumerate_ctl(word.colors)) {
    std::vector<std::vector<S>> stack;
    std::vector<S> cur = word.y[0];
    for (int p = 0; p < n; ++p) {
      if (pairing[p] > p) {
        stack.push_back(cur);
        cur = word.y[p + 1];
      } else {
        auto outer = stack.back();
        stack.pop_back();
        auto v = detail::pointwise(outer, ctx.eta(word.colors[p], cur));
        cur = detail::pointwise(v, word.y[p + 1]);
      }
    }
    for (int v = 0; v < ctx.vertex_count(); ++v) total[v] = total[v] + cur[v];
  }
  return total;
}

/// n-th moment of the cup element of the given color localized at a vertex,
/// normalized by gamma_vertex. Sum over noncrossing partitions of the n cup
/// strands: each block is a loop based at its nesting vertex, worth
/// sum_w n^c_{u,w} gamma_w / gamma_u with the same edge carrying every leg
/// of the block; gaps between legs are based at the far vertex w.
/// On a full fusion graph this evaluates trace_wedge(cup^n) at delta_c.
template <class S>
S cup_moment(const MomentContext<S>& ctx, char color, int n, int vertex) {
  if (vertex < 0 || vertex >= ctx.vertex_count())
    throw std::domain_error("no such vertex");
  if (n < 0) throw std::domain_error("moment order must be nonnegative");
  int nv = ctx.vertex_count();
  // m[k][u], filled by increasing k
  std::vector<std::vector<S>> m(n + 1, std::vector<S>(nv, S(0)));
  for (int u = 0; u < nv; ++u) m[0][u] = S(1);
  for (int k = 1; k <= n; ++k) {
    for (int u = 0; u < nv; ++u) {
      S acc(0);
      for (int legs = 1; legs <= k; ++legs) {
        for (int tail = 0; tail + legs <= k; ++tail) {
          int inside = k - legs - tail;
          // sum over the block's edge and the partitions of the inside gaps
          S block(0);
          for (int w = 0; w < nv; ++w) {
            long long a = ctx.adjacency(color, u, w);
            if (a == 0) continue;
            // I_{legs-1}(w, inside): compositions of `inside` into legs-1 gaps
            S gaps(0);
            if (legs == 1) {
              if (inside == 0) gaps = S(1);
            } else {
              // small convolution power
              std::vector<S> conv(inside + 1, S(0));
              conv[0] = S(1);
              for (int rep = 0; rep < legs - 1; ++rep) {
                std::vector<S> next(inside + 1, S(0));
                for (int s = 0; s <= inside; ++s)
                  for (int g = 0; s + g <= inside; ++g)
                    next[s + g] = next[s + g] + conv[s] * m[g][w];
                conv.swap(next);
              }
              gaps = conv[inside];
            }
            block = block + S(a) * (ctx.gamma()[w] / ctx.gamma()[u]) * gaps;
          }
          acc = acc + block * m[tail][u];
        }
      }
      m[k][u] = acc;
    }
  }
  return m[n][vertex];
}

/// Moment sequence of the word element X_{w_1}...X_{w_m} against the trace:
/// s_k = Tr(E((X_w)^k)) / Tr(1) with unit base vectors.
template <class S>
std::vector<S> word_moments(const MomentContext<S>& ctx,
                            const std::string& colors, int n) {
  std::vector<S> out;
  for (int k = 1; k <= n; ++k) {
    std::string rep;
    for (int i = 0; i < k; ++i) rep += colors;
    MomentWord<S> w;
    w.colors = rep;
    w.y.assign(rep.size() + 1, ctx.unit());
    auto e = expect(ctx, w);
    out.push_back(ctx.trace(e) / ctx.trace(ctx.unit()));
  }
  return out;
}

}  // namespace tlf
