#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tlfactor/json_io.hpp"

using namespace tlf;

namespace {

json load_json(const std::string& name) {
  std::ifstream in(std::string(TLF_DATA_DIR) + "/" + name + ".json");
  REQUIRE(in);
  json j;
  in >> j;
  return j;
}

const std::vector<std::string> kBundled = {
    "trivial", "z2", "z3", "z4", "z5", "fibonacci", "ising", "rep_s3",
    "free_group_2"};

}  // namespace

TEST_CASE("category specs round-trip through parse and emit") {
  for (const auto& name : kBundled) {
    auto spec = parse_category(load_json(name));
    json emitted = category_to_json(spec);
    auto reparsed = parse_category(emitted);
    CHECK(category_to_json(reparsed) == emitted);
    CHECK(emitted.dump() == category_to_json(reparsed).dump());
    if (!spec.infinite) {
      CHECK(reparsed.ring.size() == spec.ring.size());
      for (int x = 0; x < spec.ring.size(); ++x)
        for (int y = 0; y < spec.ring.size(); ++y)
          for (int z = 0; z < spec.ring.size(); ++z)
            CHECK(reparsed.ring.mult(x, y, z) == spec.ring.mult(x, y, z));
    }
  }
}

TEST_CASE("graph specs round-trip") {
  for (const std::string name : {"graphs/two_loops", "graphs/cup_square"}) {
    auto g = parse_graph(load_json(name));
    json emitted = graph_to_json(g);
    auto reparsed = parse_graph(emitted);
    CHECK(graph_to_json(reparsed) == emitted);
  }
}

TEST_CASE("emission is deterministic") {
  auto spec = parse_category(load_json("fibonacci"));
  CHECK(category_to_json(spec).dump(2) == category_to_json(spec).dump(2));
  auto g = parse_graph(load_json("graphs/cup_square"));
  CHECK(emit_dot(g) == emit_dot(g));
}

TEST_CASE("dot output carries weights and multiplicities") {
  auto spec = parse_category(load_json("z2"));
  auto fg = build_fusion_graph(spec.ring, spec.generators);
  std::string dot = emit_dot(fg.graph);
  CHECK(dot.find("graph fusion {") != std::string::npos);
  CHECK(dot.find("\"1\" [label=\"1 (w=1)\"]") != std::string::npos);
  CHECK(dot.find("\"1\" -- \"g\" [label=\"a x2\"]") != std::string::npos);

  // loops render as self-edges
  WeightedGraph loop = parse_graph(load_json("graphs/two_loops"));
  std::string loopdot = emit_dot(loop);
  CHECK(loopdot.find("\"v\" -- \"v\"") != std::string::npos);
}

TEST_CASE("malformed specs are rejected") {
  json j = load_json("fibonacci");
  j["mult"].push_back({9, 9, 9, 1});
  CHECK_THROWS_AS(parse_category(j), std::runtime_error);

  json g = load_json("graphs/two_loops");
  g["edges"][0]["v"] = "nope";
  CHECK_THROWS_AS(parse_graph(g), std::runtime_error);

  json bad_dim = load_json("fibonacci");
  bad_dim["simples"][1]["dim"] = "not a number";
  CHECK_THROWS_AS(parse_category(bad_dim), std::runtime_error);
}

TEST_CASE("exact weights survive the graph round trip") {
  auto g = parse_graph(load_json("graphs/cup_square"));
  REQUIRE(g.exact);
  CHECK(g.vertices[0].weight == Quad(Rational(3, 5)));
  json emitted = graph_to_json(g);
  CHECK(emitted["vertices"][0]["weight"] == "3/5");
}

TEST_CASE("float weights mark the graph as inexact") {
  json j = {{"vertices", {{{"id", "a"}, {"weight", 0.25}}}},
            {"edges", json::array()},
            {"base", "a"}};
  auto g = parse_graph(j);
  CHECK(!g.exact);
  CHECK(g.vertices[0].weight_f == 0.25);
}

TEST_CASE("quad report has exact and float fields") {
  auto j = quad_report(Quad(Rational(1, 2), Rational(1, 2), 5));
  CHECK(j["exact"] == "1/2+1/2*sqrt(5)");
  CHECK(j["float"].get<double>() == doctest::Approx(1.618033988749895));
}

TEST_CASE("diagram text form parses and elements serialize") {
  auto [word, m] = parse_diagram("cddc:(0 3)(1 2)");
  CHECK(word == "cddc");
  CHECK(m == Matching{3, 2, 1, 0});
  CHECK_THROWS_AS(parse_diagram("cc:(0 0)"), std::runtime_error);
  CHECK_THROWS_AS(parse_diagram("cc:"), std::runtime_error);
  CHECK_THROWS_AS(parse_diagram("cc:(0 1"), std::runtime_error);

  auto image = phi(TLElement::diagram("cc", Matching{1, 0}));
  json j = element_to_json(image);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["word"] == "");
  CHECK(j[0]["terms"][0]["coeff"] == "d_c");
  CHECK(j[1]["word"] == "cc");
  CHECK(j[1]["terms"][0]["pairs"] == json::array({{0, 1}}));
  CHECK(j[1]["terms"][0]["coeff"] == "1");
}
