#include <doctest.h>

#include <string>
#include <vector>

#include "tlfactor/fusion.hpp"
#include "tlfactor/json_io.hpp"

using namespace tlf;

namespace {

CategorySpec load(const std::string& name) {
  return load_category(std::string(TLF_DATA_DIR) + "/" + name + ".json");
}

const std::vector<std::string> kBundled = {
    "trivial", "z2", "z3", "z4", "z5", "fibonacci", "ising", "rep_s3"};

GeneratorObject simple_generator(const FusionRing& ring, int id, char color) {
  GeneratorObject g;
  g.color = color;
  g.multiplicities.assign(ring.size(), 0);
  g.multiplicities[id] = 1;
  return g;
}

}  // namespace

TEST_CASE("bundled category specs validate with zero violations") {
  for (const auto& name : kBundled) {
    auto spec = load(name);
    auto violations = validate_ring(spec.ring);
    INFO(name);
    CHECK(violations.empty());
  }
}

TEST_CASE("a broken unit law is reported by name") {
  auto spec = load("fibonacci");
  spec.ring.set_mult(0, 1, 0, 1);  // force N(1,tau;1) = 1
  auto violations = validate_ring(spec.ring);
  REQUIRE(!violations.empty());
  bool unit_law = false;
  for (const auto& v : violations)
    if (v.find("unit law") != std::string::npos) unit_law = true;
  CHECK(unit_law);
}

TEST_CASE("a broken reciprocity is reported") {
  auto spec = load("z3");
  spec.ring.set_mult(1, 1, 2, 0);  // w (x) w no longer reaches w2
  auto violations = validate_ring(spec.ring);
  bool found = false;
  for (const auto& v : violations)
    if (v.find("Frobenius reciprocity") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("Frobenius reciprocity holds over the full bundled tables") {
  for (const auto& name : kBundled) {
    auto ring = load(name).ring;
    for (int x = 0; x < ring.size(); ++x)
      for (int y = 0; y < ring.size(); ++y)
        for (int z = 0; z < ring.size(); ++z) {
          CHECK(ring.mult(x, y, z) == ring.mult(z, ring.dual(y), x));
          CHECK(ring.mult(x, y, z) == ring.mult(ring.dual(x), z, y));
        }
  }
}

TEST_CASE("Frobenius-Perron dimensions of the standard examples") {
  auto fib = fp_dimensions(load("fibonacci").ring);
  REQUIRE(fib.exact);
  CHECK(fib.dims[0] == doctest::Approx(1.0));
  CHECK(fib.dims[1] == doctest::Approx(1.6180339887498949).epsilon(1e-10));
  CHECK(fib.dims_exact[1] == Quad(Rational(1, 2), Rational(1, 2), 5));

  auto z2 = fp_dimensions(load("z2").ring);
  CHECK(z2.dims[0] == doctest::Approx(1.0));
  CHECK(z2.dims[1] == doctest::Approx(1.0));

  auto ising = fp_dimensions(load("ising").ring);
  CHECK(ising.dims[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
  CHECK(ising.dims_exact[1] == Quad::sqrt_of(2));
}

TEST_CASE("global dimensions") {
  CHECK(global_dim_exact(load("fibonacci").ring) ==
        Quad(Rational(5, 2), Rational(1, 2), 5));
  CHECK(global_dim_exact(load("z2").ring) == Quad(2));
  CHECK(global_dim_exact(load("ising").ring) == Quad(4));
  CHECK(global_dim_exact(load("rep_s3").ring) == Quad(6));
}

TEST_CASE("reducible fusion data is rejected") {
  // two disjoint unit-like blocks
  std::vector<SimpleObject> simples(2);
  simples[0] = {0, "1", 0, Quad(1)};
  simples[1] = {1, "a", 1, Quad(1)};
  FusionRing ring(simples, 0);
  ring.set_mult(0, 0, 0, 1);
  ring.set_mult(1, 1, 1, 1);
  CHECK_THROWS_WITH_AS(fp_dimensions(ring), "reducible fusion data",
                       std::domain_error);
}

TEST_CASE("inconsistent supplied dimensions are rejected") {
  auto spec = load("z2");
  std::vector<SimpleObject> simples = spec.ring.simples();
  simples[1].dim = Quad(2);  // invertible object must have dim 1
  FusionRing ring(simples, 0);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z)
        ring.set_mult(x, y, z, spec.ring.mult(x, y, z));
  CHECK_THROWS_AS(fp_dimensions(ring), std::domain_error);
}

TEST_CASE("tensor decomposition examples") {
  auto fib = load("fibonacci");
  auto tau = simple_generator(fib.ring, 1, 't');
  CHECK(tensor_decompose(fib.ring, {tau, tau}) ==
        std::vector<long long>{1, 1});
  CHECK(tensor_decompose(fib.ring, {}) == std::vector<long long>{1, 0});

  auto z2 = load("z2");
  // (g + g) tensor (g + g) = 4 * unit
  const auto& gen = z2.generators.at(0);
  CHECK(tensor_decompose(z2.ring, {gen, gen}) ==
        std::vector<long long>{4, 0});
}

TEST_CASE("tensor decomposition is associative under concatenation") {
  auto z3 = load("z3");
  auto x = simple_generator(z3.ring, 1, 'x');
  auto xbar = simple_generator(z3.ring, 2, 'y');
  std::vector<GeneratorObject> w1 = {x, x};
  std::vector<GeneratorObject> w2 = {xbar, x, xbar};
  std::vector<GeneratorObject> both = w1;
  both.insert(both.end(), w2.begin(), w2.end());

  // fold w2 on top of the decomposition of w1, straight from the table
  auto u = tensor_decompose(z3.ring, w1);
  for (const auto& g : w2) {
    std::vector<long long> next(z3.ring.size(), 0);
    for (int y = 0; y < z3.ring.size(); ++y)
      for (int t = 0; t < z3.ring.size(); ++t)
        for (int z = 0; z < z3.ring.size(); ++z)
          next[z] += u[y] * g.multiplicities[t] * z3.ring.mult(y, t, z);
    u = next;
  }
  CHECK(u == tensor_decompose(z3.ring, both));
}

TEST_CASE("hom dimension examples and symmetry") {
  auto fib = load("fibonacci");
  auto tau = simple_generator(fib.ring, 1, 't');
  CHECK(hom_dim(fib.ring, {tau, tau}, {tau, tau}) == 2);
  CHECK(hom_dim(fib.ring, {}, {}) == 1);
  CHECK(hom_dim(fib.ring, {tau}, {}) == 0);
  CHECK(hom_dim(fib.ring, {tau, tau}, {tau}) ==
        hom_dim(fib.ring, {tau}, {tau, tau}));
}

TEST_CASE("hom dimension moves a letter across by duality") {
  auto z3 = load("z3");
  auto x = simple_generator(z3.ring, 1, 'x');
  auto xbar = simple_generator(z3.ring, 2, 'y');
  // hom(alpha . x, beta) = hom(alpha, beta . xbar)
  std::vector<std::vector<GeneratorObject>> words = {
      {}, {x}, {xbar}, {x, x}, {x, xbar}, {xbar, x}};
  for (const auto& alpha : words)
    for (const auto& beta : words) {
      auto ax = alpha;
      ax.push_back(x);
      auto bx = beta;
      bx.push_back(xbar);
      CHECK(hom_dim(z3.ring, ax, beta) == hom_dim(z3.ring, alpha, bx));
    }
}

TEST_CASE("fusion graph of Z/2 with doubled generator") {
  auto z2 = load("z2");
  auto fg = build_fusion_graph(z2.ring, z2.generators);
  CHECK(fg.graph.vertex_count() == 2);
  CHECK(fg.graph.multiplicity(0, 1) == 2);
  CHECK(fg.graph.multiplicity(0, 0) == 0);
  CHECK(fg.delta.at('a') == Quad(2));
  CHECK(fg.warnings.empty());
}

TEST_CASE("fusion graph of the trivial category is a double loop") {
  auto spec = load("trivial");
  auto fg = build_fusion_graph(spec.ring, spec.generators);
  CHECK(fg.graph.vertex_count() == 1);
  CHECK(fg.graph.multiplicity(0, 0) == 2);
  CHECK(fg.graph.edge_count() == 2);
}

TEST_CASE("fusion graph of Fibonacci has two edges and two loops") {
  auto spec = load("fibonacci");
  auto fg = build_fusion_graph(spec.ring, spec.generators);
  REQUIRE(fg.graph.vertex_count() == 2);
  int unit = fg.graph.base;
  int tau = 1 - unit;
  CHECK(fg.graph.multiplicity(unit, tau) == 2);
  CHECK(fg.graph.multiplicity(tau, tau) == 2);
  CHECK(fg.graph.multiplicity(unit, unit) == 0);
}

TEST_CASE("non self-dual generator is rejected") {
  auto z3 = load("z3");
  auto bad = simple_generator(z3.ring, 1, 'x');  // w alone, dual is w2
  CHECK_THROWS_AS(build_fusion_graph(z3.ring, {bad}), std::domain_error);
}

TEST_CASE("unreachable simples warn instead of failing") {
  auto z4 = load("z4");
  GeneratorObject g2;
  g2.color = 'b';
  g2.multiplicities = {0, 0, 2, 0};  // g2 + g2 only reaches {1, g2}
  auto fg = build_fusion_graph(z4.ring, {g2});
  CHECK(fg.graph.vertex_count() == 2);
  CHECK(fg.warnings.size() == 2);
}

TEST_CASE("FP weight equation holds per color on every bundled graph") {
  for (const auto& name : kBundled) {
    auto spec = load(name);
    auto fg = build_fusion_graph(spec.ring, spec.generators);
    REQUIRE(fg.graph.exact);
    for (const auto& [color, delta] : fg.delta) {
      for (int v = 0; v < fg.graph.vertex_count(); ++v) {
        Quad rhs(0);
        for (int w = 0; w < fg.graph.vertex_count(); ++w) {
          int n = fg.graph.multiplicity(v, w, color);
          if (n) rhs += Quad(n) * fg.graph.vertices[w].weight;
        }
        INFO(name << " vertex " << v);
        CHECK(delta * fg.graph.vertices[v].weight == rhs);
      }
    }
  }
}

TEST_CASE("FP weight equation holds numerically when dims are not supplied") {
  auto spec = load("fibonacci");
  std::vector<SimpleObject> simples = spec.ring.simples();
  for (auto& s : simples) s.dim.reset();
  FusionRing ring(simples, 0);
  for (int x = 0; x < ring.size(); ++x)
    for (int y = 0; y < ring.size(); ++y)
      for (int z = 0; z < ring.size(); ++z)
        ring.set_mult(x, y, z, spec.ring.mult(x, y, z));

  auto fg = build_fusion_graph(ring, spec.generators);
  CHECK(!fg.graph.exact);
  double delta = fg.delta_f.at('a');
  CHECK(delta == doctest::Approx(1.0 + std::sqrt(5.0)).epsilon(1e-10));
  for (int v = 0; v < fg.graph.vertex_count(); ++v) {
    double rhs = 0.0;
    for (int w = 0; w < fg.graph.vertex_count(); ++w)
      rhs += fg.graph.multiplicity(v, w, 'a') * fg.graph.vertices[w].weight_f;
    CHECK(std::abs(delta * fg.graph.vertices[v].weight_f - rhs) < 1e-10);
  }
}

TEST_CASE("ball subgraphs") {
  auto spec = load("fibonacci");
  auto fg = build_fusion_graph(spec.ring, spec.generators);
  auto b0 = ball_subgraph(fg, 0);
  CHECK(b0.graph.vertex_count() == 1);
  CHECK(b0.graph.edges.empty());
  auto b1 = ball_subgraph(fg, 1);
  CHECK(b1.graph.vertex_count() == 2);
  CHECK(b1.graph.edge_count() == 4);
  auto b9 = ball_subgraph(fg, 9);
  CHECK(b9.graph.vertex_count() == fg.graph.vertex_count());
  CHECK(b9.graph.edge_count() == fg.graph.edge_count());
  CHECK_THROWS_AS(ball_subgraph(fg, -1), std::domain_error);
}
