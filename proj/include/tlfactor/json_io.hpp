#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tlfactor/diagrams.hpp"
#include "tlfactor/fusion.hpp"
#include "tlfactor/graph.hpp"

namespace tlf {

using json = nlohmann::ordered_json;

/// Lazily generated infinite fusion data; balls of its fusion graph are
/// materialized on demand.
struct InfiniteFamily {
  std::string kind;  // "free_group"
  int rank = 1;
  int colors = 1;
};

struct CategorySpec {
  std::string name;
  FusionRing ring;
  std::vector<GeneratorObject> generators;
  std::optional<InfiniteFamily> infinite;
};

/// Category spec files: the first listed simple is the unit object.
CategorySpec parse_category(const json& j);
CategorySpec load_category(const std::string& path);
json category_to_json(const CategorySpec& spec);

WeightedGraph parse_graph(const json& j);
WeightedGraph load_graph(const std::string& path);
json graph_to_json(const WeightedGraph& g);

/// Deterministic DOT rendering with weight and edge labels.
std::string emit_dot(const WeightedGraph& g);

/// Scalar rendering: exact string plus float, per report conventions.
json quad_report(const Quad& q);

/// Graded diagram elements as [{word, terms: [{pairs, coeff}]}] with coeff
/// a polynomial string in the named loop variables.
json element_to_json(const TLElement& x);

/// Parses the textual diagram form "word:(0 1)(2 3)".
std::pair<std::string, Matching> parse_diagram(const std::string& text);

}  // namespace tlf
