#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "tlfactor/quadratic.hpp"

namespace tlf {

/// Connected weighted multigraph with colored edges and loops. Vertex
/// weights are carried exactly when known (Quad) with a double mirror for
/// numeric paths; `exact` says whether the Quad values are trustworthy.
struct WeightedGraph {
  struct Vertex {
    std::string name;
    Quad weight;     // valid when exact
    double weight_f = 0.0;
  };
  struct Edge {
    int v = 0;
    int w = 0;       // v == w is a loop
    char color = 'a';
    int mult = 1;
  };

  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  int base = 0;
  bool exact = true;

  int vertex_count() const { return static_cast<int>(vertices.size()); }

  /// Total number of edges counted with multiplicity.
  int edge_count() const {
    int n = 0;
    for (const auto& e : edges) n += e.mult;
    return n;
  }

  int find_vertex(const std::string& name) const {
    for (int i = 0; i < vertex_count(); ++i)
      if (vertices[i].name == name) return i;
    return -1;
  }

  /// Number of edges between v and w of the given color (any color if 0).
  int multiplicity(int v, int w, char color = 0) const {
    int n = 0;
    for (const auto& e : edges) {
      if (color != 0 && e.color != color) continue;
      if ((e.v == v && e.w == w) || (e.v == w && e.w == v)) n += e.mult;
    }
    return n;
  }

  std::vector<char> colors() const {
    std::vector<char> cs;
    for (const auto& e : edges)
      if (std::find(cs.begin(), cs.end(), e.color) == cs.end())
        cs.push_back(e.color);
    std::sort(cs.begin(), cs.end());
    return cs;
  }

  bool connected() const;

  /// Induced subgraph on vertices within graph distance `radius` of the
  /// base vertex, keeping all edges among them.
  WeightedGraph ball(int radius) const;
};

}  // namespace tlf
