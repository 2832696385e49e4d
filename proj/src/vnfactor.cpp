#include "tlfactor/vnfactor.hpp"

#include <algorithm>
#include <queue>

namespace tlf {

FactorReport identify_factor(const FusionRing& ring,
                             const std::vector<GeneratorObject>& generators) {
  FusionGraph fg = build_fusion_graph(ring, generators);
  FactorReport rep;
  rep.finite = true;
  rep.warnings = fg.warnings;
  if (!fg.graph.connected())
    throw std::domain_error("reachable fusion graph is disconnected");

  std::string base_marker = "p_" + fg.graph.vertices[fg.graph.base].name;
  if (fg.graph.exact) {
    auto dec = graph_algebra<Quad>(fg.graph);
    auto cmp = compress<Quad>(dec, base_marker);
    if (!cmp.is_factor)
      throw std::domain_error("base vertex carries an atom");
    rep.exact = true;
    rep.t_exact = cmp.param;
    rep.t = cmp.param.to_double();
  } else {
    auto dec = graph_algebra<double>(fg.graph);
    auto cmp = compress<double>(dec, base_marker);
    if (!cmp.is_factor)
      throw std::domain_error("base vertex carries an atom");
    rep.t = cmp.param;
  }
  return rep;
}

WeightedGraph free_group_ball(int rank, int colors, int radius) {
  if (rank < 1 || colors < 1 || radius < 0)
    throw std::domain_error("free group family needs rank, colors >= 1");

  // reduced words over letters 1..rank and their inverses -1..-rank
  std::vector<std::vector<int>> words;
  std::map<std::vector<int>, int> index;
  auto intern = [&](const std::vector<int>& w) {
    auto it = index.find(w);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(words.size());
    words.push_back(w);
    index[w] = id;
    return id;
  };
  intern({});
  for (int d = 0; d < radius; ++d) {
    size_t upto = words.size();
    for (size_t i = 0; i < upto; ++i) {
      if (static_cast<int>(words[i].size()) != d) continue;
      for (int a = 1; a <= rank; ++a) {
        for (int sign : {1, -1}) {
          int letter = sign * a;
          if (!words[i].empty() && words[i].back() == -letter) continue;
          auto w = words[i];
          w.push_back(letter);
          intern(w);
        }
      }
    }
  }

  WeightedGraph g;
  g.exact = true;
  g.base = 0;
  for (const auto& w : words) {
    WeightedGraph::Vertex v;
    if (w.empty()) {
      v.name = "e";
    } else {
      for (int x : w) {
        v.name += (x > 0) ? std::string(1, char('a' + x - 1))
                          : std::string(1, char('A' - x - 1));
      }
    }
    v.weight = Quad(1);
    v.weight_f = 1.0;
    g.vertices.push_back(v);
  }
  // every undirected Cayley edge joins words whose lengths differ by one;
  // record each from its shorter endpoint
  for (int i = 0; i < static_cast<int>(words.size()); ++i) {
    for (int a = 1; a <= rank; ++a) {
      for (int sign : {1, -1}) {
        int letter = sign * a;
        if (!words[i].empty() && words[i].back() == -letter) continue;
        auto w = words[i];
        w.push_back(letter);
        auto it = index.find(w);
        if (it == index.end()) continue;
        for (int c = 0; c < colors; ++c)
          g.edges.push_back({i, it->second, static_cast<char>('a' + c), 1});
      }
    }
  }
  return g;
}

Quad closed_form_t_exact(const FusionRing& ring, int generator_simple) {
  Quad dimX = *ring.simple(generator_simple).dim;
  return Quad(1) + global_dim_exact(ring) * (Quad(2) * dimX - Quad(1));
}

double closed_form_t(const FusionRing& ring, int generator_simple) {
  if (ring.dims_exact())
    return closed_form_t_exact(ring, generator_simple).to_double();
  auto fp = fp_dimensions(ring);
  return 1.0 + global_dim(ring) * (2.0 * fp.dims[generator_simple] - 1.0);
}

Quad closed_form_s_exact(const FusionRing& ring) {
  Quad dimY(0);
  for (const auto& z : ring.simples()) dimY += *z.dim;
  return Quad(1) + global_dim_exact(ring) * (dimY - Quad(1));
}

double closed_form_s(const FusionRing& ring) {
  if (ring.dims_exact()) return closed_form_s_exact(ring).to_double();
  auto fp = fp_dimensions(ring);
  double dimY = 0.0;
  for (double d : fp.dims) dimY += d;
  return 1.0 + global_dim(ring) * (dimY - 1.0);
}

}  // namespace tlf
