#include "tlfactor/fusion.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace tlf {

namespace {

std::string triple(const FusionRing& r, int x, int y, int z) {
  return "N(" + r.simple(x).name + "," + r.simple(y).name + ";" +
         r.simple(z).name + ")";
}

}  // namespace

std::vector<std::string> validate_ring(const FusionRing& ring) {
  std::vector<std::string> bad;
  int s = ring.size();
  int u = ring.unit();

  for (int x = 0; x < s; ++x) {
    if (ring.dual(ring.dual(x)) != x)
      bad.push_back("duality: dual is not an involution at " +
                    ring.simple(x).name);
  }
  if (ring.dual(u) != u) bad.push_back("duality: unit is not self-dual");

  for (int y = 0; y < s; ++y)
    for (int z = 0; z < s; ++z) {
      int expect = (y == z) ? 1 : 0;
      if (ring.mult(u, y, z) != expect)
        bad.push_back("unit law: " + triple(ring, u, y, z) + " = " +
                      std::to_string(ring.mult(u, y, z)));
      if (ring.mult(y, u, z) != expect)
        bad.push_back("unit law: " + triple(ring, y, u, z) + " = " +
                      std::to_string(ring.mult(y, u, z)));
    }

  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y)
      for (int z = 0; z < s; ++z) {
        int n = ring.mult(x, y, z);
        if (n != ring.mult(z, ring.dual(y), x))
          bad.push_back("Frobenius reciprocity: " + triple(ring, x, y, z) +
                        " vs " + triple(ring, z, ring.dual(y), x));
        if (n != ring.mult(ring.dual(x), z, y))
          bad.push_back("Frobenius reciprocity: " + triple(ring, x, y, z) +
                        " vs " + triple(ring, ring.dual(x), z, y));
      }

  for (int x = 0; x < s; ++x)
    for (int y = 0; y < s; ++y)
      for (int z = 0; z < s; ++z)
        for (int t = 0; t < s; ++t) {
          long long lhs = 0, rhs = 0;
          for (int w = 0; w < s; ++w) {
            lhs += static_cast<long long>(ring.mult(x, y, w)) *
                   ring.mult(w, z, t);
            rhs += static_cast<long long>(ring.mult(y, z, w)) *
                   ring.mult(x, w, t);
          }
          if (lhs != rhs)
            bad.push_back("associativity at (" + ring.simple(x).name + "," +
                          ring.simple(y).name + "," + ring.simple(z).name +
                          ";" + ring.simple(t).name + ")");
        }

  if (ring.dims_exact()) {
    if (*ring.simple(u).dim != Quad(1))
      bad.push_back("dimension: unit has dim != 1");
    for (int x = 0; x < s; ++x) {
      if (*ring.simple(x).dim != *ring.simple(ring.dual(x)).dim)
        bad.push_back("dimension: dim(" + ring.simple(x).name +
                      ") != dim of its dual");
      if (Quad(1) > *ring.simple(x).dim)
        bad.push_back("dimension: dim(" + ring.simple(x).name + ") < 1");
    }
    for (int x = 0; x < s; ++x)
      for (int y = 0; y < s; ++y) {
        Quad lhs = *ring.simple(x).dim * *ring.simple(y).dim;
        Quad rhs(0);
        for (int z = 0; z < s; ++z)
          rhs += Quad(ring.mult(x, y, z)) * *ring.simple(z).dim;
        if (lhs != rhs)
          bad.push_back("dimension equation at (" + ring.simple(x).name +
                        "," + ring.simple(y).name + ")");
      }
  }
  return bad;
}

FPDimensions fp_dimensions(const FusionRing& ring) {
  int s = ring.size();
  // connectivity of the regular-object fusion matrix
  std::vector<char> seen(s, 0);
  std::queue<int> q;
  seen[ring.unit()] = 1;
  q.push(ring.unit());
  int count = 1;
  while (!q.empty()) {
    int y = q.front();
    q.pop();
    for (int z = 0; z < s; ++z) {
      if (seen[z]) continue;
      long long link = 0;
      for (int x = 0; x < s; ++x)
        link += ring.mult(x, y, z) + ring.mult(x, z, y);
      if (link > 0) {
        seen[z] = 1;
        ++count;
        q.push(z);
      }
    }
  }
  if (count != s) throw std::domain_error("reducible fusion data");

  // Perron eigenvector of the regular object's fusion matrix by power
  // iteration; the matrix is primitive (the unit contributes the identity).
  std::vector<double> d(s, 1.0), next(s, 0.0);
  for (int iter = 0; iter < 10000; ++iter) {
    for (int z = 0; z < s; ++z) {
      next[z] = 0.0;
      for (int x = 0; x < s; ++x)
        for (int y = 0; y < s; ++y)
          next[z] += ring.mult(x, y, z) * d[y];
    }
    double scale = next[ring.unit()];
    double diff = 0.0;
    for (int z = 0; z < s; ++z) {
      next[z] /= scale;
      diff = std::max(diff, std::abs(next[z] - d[z]));
    }
    d.swap(next);
    if (diff < 1e-14 && iter > 3) break;
  }

  FPDimensions out;
  out.dims = d;
  if (ring.dims_exact()) {
    for (int z = 0; z < s; ++z) {
      double supplied = ring.simple(z).dim->to_double();
      if (std::abs(supplied - d[z]) > 1e-10)
        throw std::domain_error(
            "supplied dimension disagrees with Perron eigenvector at " +
            ring.simple(z).name);
      out.dims_exact.push_back(*ring.simple(z).dim);
    }
    out.exact = true;
  }
  return out;
}

Quad global_dim_exact(const FusionRing& ring) {
  if (!ring.dims_exact())
    throw std::domain_error("exact dimensions unavailable");
  Quad total(0);
  for (const auto& x : ring.simples()) total += *x.dim * *x.dim;
  return total;
}

double global_dim(const FusionRing& ring) {
  if (ring.dims_exact()) return global_dim_exact(ring).to_double();
  auto fp = fp_dimensions(ring);
  double total = 0.0;
  for (double d : fp.dims) total += d * d;
  return total;
}

std::vector<long long> tensor_decompose(
    const FusionRing& ring, const std::vector<GeneratorObject>& word) {
  int s = ring.size();
  std::vector<long long> v(s, 0);
  v[ring.unit()] = 1;
  for (const auto& g : word) {
    std::vector<long long> next(s, 0);
    for (int y = 0; y < s; ++y) {
      if (v[y] == 0) continue;
      for (int t = 0; t < s; ++t) {
        if (g.multiplicities[t] == 0) continue;
        for (int z = 0; z < s; ++z)
          next[z] += v[y] * g.multiplicities[t] * ring.mult(y, t, z);
      }
    }
    v.swap(next);
  }
  return v;
}

long long hom_dim(const FusionRing& ring,
                  const std::vector<GeneratorObject>& alpha,
                  const std::vector<GeneratorObject>& beta) {
  auto va = tensor_decompose(ring, alpha);
  auto vb = tensor_decompose(ring, beta);
  long long total = 0;
  for (int z = 0; z < ring.size(); ++z) total += va[z] * vb[z];
  return total;
}

Quad generator_delta_exact(const FusionRing& ring, const GeneratorObject& g) {
  if (!ring.dims_exact())
    throw std::domain_error("exact dimensions unavailable");
  Quad d(0);
  for (int z = 0; z < ring.size(); ++z)
    d += Quad(g.multiplicities[z]) * *ring.simple(z).dim;
  return d;
}

double generator_delta(const FusionRing& ring, const GeneratorObject& g) {
  if (ring.dims_exact()) return generator_delta_exact(ring, g).to_double();
  auto fp = fp_dimensions(ring);
  double d = 0.0;
  for (int z = 0; z < ring.size(); ++z)
    d += g.multiplicities[z] * fp.dims[z];
  return d;
}

FusionGraph build_fusion_graph(const FusionRing& ring,
                               const std::vector<GeneratorObject>& generators) {
  for (const auto& g : generators)
    if (!g.symmetrically_self_dual(ring))
      throw std::domain_error(std::string("generator of color '") + g.color +
                              "' is not symmetrically self-dual");

  int s = ring.size();
  auto fp = fp_dimensions(ring);

  // edge multiplicity of color g between simples v, w
  auto edge_mult = [&](const GeneratorObject& g, int v, int w) {
    long long n = 0;
    for (int t = 0; t < s; ++t)
      n += static_cast<long long>(g.multiplicities[t]) * ring.mult(v, t, w);
    return static_cast<int>(n);
  };

  // reachable simples from the unit
  std::vector<int> order;
  std::vector<char> seen(s, 0);
  std::queue<int> q;
  seen[ring.unit()] = 1;
  q.push(ring.unit());
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    order.push_back(v);
    for (int w = 0; w < s; ++w) {
      if (seen[w]) continue;
      for (const auto& g : generators) {
        if (edge_mult(g, v, w) > 0) {
          seen[w] = 1;
          q.push(w);
          break;
        }
      }
    }
  }

  FusionGraph out;
  std::vector<int> vertex_of(s, -1);
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    int z = order[i];
    vertex_of[z] = i;
    WeightedGraph::Vertex vx;
    vx.name = ring.simple(z).name;
    vx.weight_f = fp.dims[z];
    if (fp.exact) vx.weight = fp.dims_exact[z];
    out.graph.vertices.push_back(vx);
    out.simple_ids.push_back(z);
  }
  out.graph.exact = fp.exact;
  out.graph.base = vertex_of[ring.unit()];

  for (int z = 0; z < s; ++z)
    if (vertex_of[z] < 0)
      out.warnings.push_back("simple '" + ring.simple(z).name +
                             "' unreachable from the unit via the generators");

  for (const auto& g : generators) {
    for (int i = 0; i < static_cast<int>(order.size()); ++i) {
      for (int j = i; j < static_cast<int>(order.size()); ++j) {
        int n = edge_mult(g, order[i], order[j]);
        if (n > 0)
          out.graph.edges.push_back({i, j, g.color, n});
      }
    }
    if (ring.dims_exact())
      out.delta[g.color] = generator_delta_exact(ring, g);
    out.delta_f[g.color] = generator_delta(ring, g);
  }
  return out;
}

FusionGraph ball_subgraph(const FusionGraph& graph, int radius) {
  if (radius < 0) throw std::domain_error("radius must be nonnegative");
  FusionGraph out;
  out.delta = graph.delta;
  out.delta_f = graph.delta_f;
  out.warnings = graph.warnings;
  out.graph = graph.graph.ball(radius);
  // keep simple ids of retained vertices
  for (const auto& vx : out.graph.vertices) {
    for (int i = 0; i < graph.graph.vertex_count(); ++i)
      if (graph.graph.vertices[i].name == vx.name)
        out.simple_ids.push_back(graph.simple_ids[i]);
  }
  return out;
}

}  // namespace tlf
