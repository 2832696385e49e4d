#include "tlfactor/graph.hpp"

#include <algorithm>
#include <queue>

namespace tlf {

bool WeightedGraph::connected() const {
  if (vertices.empty()) return true;
  std::vector<char> seen(vertices.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& e : edges) {
      int other = -1;
      if (e.v == v) other = e.w;
      else if (e.w == v) other = e.v;
      if (other >= 0 && !seen[other]) {
        seen[other] = 1;
        ++count;
        q.push(other);
      }
    }
  }
  return count == vertex_count();
}

WeightedGraph WeightedGraph::ball(int radius) const {
  std::vector<int> dist(vertices.size(), -1);
  std::queue<int> q;
  dist[base] = 0;
  q.push(base);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (dist[v] >= radius) continue;
    for (const auto& e : edges) {
      int other = -1;
      if (e.v == v) other = e.w;
      else if (e.w == v) other = e.v;
      if (other >= 0 && dist[other] < 0) {
        dist[other] = dist[v] + 1;
        q.push(other);
      }
    }
  }
  WeightedGraph sub;
  sub.exact = exact;
  std::vector<int> relabel(vertices.size(), -1);
  for (int v = 0; v < vertex_count(); ++v) {
    if (dist[v] >= 0) {
      relabel[v] = sub.vertex_count();
      sub.vertices.push_back(vertices[v]);
    }
  }
  sub.base = relabel[base];
  for (const auto& e : edges) {
    if (relabel[e.v] >= 0 && relabel[e.w] >= 0) {
      Edge ne = e;
      ne.v = relabel[e.v];
      ne.w = relabel[e.w];
      sub.edges.push_back(ne);
    }
  }
  return sub;
}

}  // namespace tlf
