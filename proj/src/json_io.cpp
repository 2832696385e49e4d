#include "tlfactor/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tlf {

namespace {

Quad parse_scalar(const json& v, const std::string& what) {
  if (v.is_number_integer()) return Quad(v.get<long long>());
  if (v.is_string()) {
    auto q = Quad::parse(v.get<std::string>());
    if (!q) throw std::runtime_error("cannot parse " + what + ": " +
                                     v.get<std::string>());
    return *q;
  }
  throw std::runtime_error(what + " must be an integer or an exact string");
}

std::string format_float(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

CategorySpec parse_category(const json& j) {
  CategorySpec spec;
  spec.name = j.value("name", "");

  if (j.contains("infinite")) {
    const auto& inf = j.at("infinite");
    InfiniteFamily fam;
    fam.kind = inf.at("kind").get<std::string>();
    fam.rank = inf.value("rank", 1);
    fam.colors = inf.value("colors", 1);
    if (fam.kind != "free_group")
      throw std::runtime_error("unknown infinite family kind: " + fam.kind);
    spec.infinite = fam;
    return spec;
  }

  std::vector<SimpleObject> simples;
  std::vector<std::string> duals;
  for (const auto& s : j.at("simples")) {
    SimpleObject obj;
    obj.id = static_cast<int>(simples.size());
    obj.name = s.at("name").get<std::string>();
    duals.push_back(s.value("dual", obj.name));
    if (s.contains("dim")) obj.dim = parse_scalar(s.at("dim"), "dim");
    simples.push_back(obj);
  }
  FusionRing ring(simples, 0);
  for (int i = 0; i < ring.size(); ++i) {
    int d = ring.find(duals[i]);
    if (d < 0) throw std::runtime_error("unknown dual object: " + duals[i]);
    ring.set_dual(i, d);
  }
  for (const auto& row : j.at("mult")) {
    if (!row.is_array() || row.size() != 4)
      throw std::runtime_error("mult entries must be [x,y,z,n]");
    int x = row[0].get<int>(), y = row[1].get<int>(), z = row[2].get<int>();
    int n = row[3].get<int>();
    if (x < 0 || y < 0 || z < 0 || x >= ring.size() || y >= ring.size() ||
        z >= ring.size() || n < 0)
      throw std::runtime_error("mult entry out of range");
    ring.set_mult(x, y, z, n);
  }
  spec.ring = ring;

  if (j.contains("generators")) {
    for (const auto& g : j.at("generators")) {
      GeneratorObject gen;
      std::string color = g.at("color").get<std::string>();
      if (color.size() != 1)
        throw std::runtime_error("generator colors are single characters");
      gen.color = color[0];
      gen.multiplicities.assign(ring.size(), 0);
      for (const auto& [nm, mult] : g.at("components").items()) {
        int id = ring.find(nm);
        if (id < 0) throw std::runtime_error("unknown component: " + nm);
        gen.multiplicities[id] = mult.get<int>();
      }
      spec.generators.push_back(gen);
    }
  }
  return spec;
}

CategorySpec load_category(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return parse_category(j);
}

json category_to_json(const CategorySpec& spec) {
  json j;
  if (!spec.name.empty()) j["name"] = spec.name;
  if (spec.infinite) {
    j["infinite"] = {{"kind", spec.infinite->kind},
                     {"rank", spec.infinite->rank},
                     {"colors", spec.infinite->colors}};
    return j;
  }
  json simples = json::array();
  for (const auto& s : spec.ring.simples()) {
    json obj;
    obj["name"] = s.name;
    obj["dual"] = spec.ring.simple(s.dual).name;
    if (s.dim) obj["dim"] = s.dim->to_string();
    simples.push_back(obj);
  }
  j["simples"] = simples;
  json mult = json::array();
  int n = spec.ring.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (spec.ring.mult(x, y, z) != 0)
          mult.push_back({x, y, z, spec.ring.mult(x, y, z)});
  j["mult"] = mult;
  json gens = json::array();
  for (const auto& g : spec.generators) {
    json gj;
    gj["color"] = std::string(1, g.color);
    json comps;
    for (int z = 0; z < n; ++z)
      if (g.multiplicities[z] != 0)
        comps[spec.ring.simple(z).name] = g.multiplicities[z];
    gj["components"] = comps;
    gens.push_back(gj);
  }
  j["generators"] = gens;
  return j;
}

WeightedGraph parse_graph(const json& j) {
  WeightedGraph g;
  g.exact = true;
  for (const auto& v : j.at("vertices")) {
    WeightedGraph::Vertex vx;
    vx.name = v.at("id").get<std::string>();
    const auto& w = v.at("weight");
    if (w.is_number_float()) {
      g.exact = false;
      vx.weight_f = w.get<double>();
    } else {
      vx.weight = parse_scalar(w, "weight");
      vx.weight_f = vx.weight.to_double();
    }
    g.vertices.push_back(vx);
  }
  for (const auto& e : j.at("edges")) {
    WeightedGraph::Edge ed;
    ed.v = g.find_vertex(e.at("v").get<std::string>());
    ed.w = g.find_vertex(e.at("w").get<std::string>());
    if (ed.v < 0 || ed.w < 0) throw std::runtime_error("edge names unknown vertex");
    std::string color = e.value("color", "a");
    if (color.size() != 1) throw std::runtime_error("colors are single characters");
    ed.color = color[0];
    ed.mult = e.value("mult", 1);
    if (ed.mult <= 0) throw std::runtime_error("edge multiplicity must be positive");
    g.edges.push_back(ed);
  }
  if (j.contains("base")) {
    g.base = g.find_vertex(j.at("base").get<std::string>());
    if (g.base < 0) throw std::runtime_error("base names unknown vertex");
  }
  return g;
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return parse_graph(j);
}

json graph_to_json(const WeightedGraph& g) {
  json j;
  json verts = json::array();
  for (const auto& v : g.vertices) {
    json vj;
    vj["id"] = v.name;
    if (g.exact)
      vj["weight"] = v.weight.to_string();
    else
      vj["weight"] = v.weight_f;
    verts.push_back(vj);
  }
  j["vertices"] = verts;
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"v", g.vertices[e.v].name},
                     {"w", g.vertices[e.w].name},
                     {"color", std::string(1, e.color)},
                     {"mult", e.mult}});
  }
  j["edges"] = edges;
  j["base"] = g.vertices.at(g.base).name;
  return j;
}

std::string emit_dot(const WeightedGraph& g) {
  std::ostringstream os;
  os << "graph fusion {\n";
  for (const auto& v : g.vertices) {
    os << "  \"" << v.name << "\" [label=\"" << v.name << " (w=";
    if (g.exact)
      os << v.weight.to_string();
    else
      os << format_float(v.weight_f);
    os << ")\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  \"" << g.vertices[e.v].name << "\" -- \"" << g.vertices[e.w].name
       << "\" [label=\"" << e.color;
    if (e.mult != 1) os << " x" << e.mult;
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

json quad_report(const Quad& q) {
  json j;
  j["exact"] = q.to_string();
  j["float"] = q.to_double();
  return j;
}

json element_to_json(const TLElement& x) {
  json out = json::array();
  for (const auto& [word, comp] : x.components()) {
    json terms = json::array();
    for (const auto& [m, coeff] : comp) {
      json pairs = json::array();
      for (int i = 0; i < static_cast<int>(m.size()); ++i)
        if (m[i] > i) pairs.push_back({i, m[i]});
      terms.push_back({{"pairs", pairs}, {"coeff", coeff.to_string()}});
    }
    out.push_back({{"word", word}, {"terms", terms}});
  }
  return out;
}

std::pair<std::string, Matching> parse_diagram(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::runtime_error("diagram form is word:(i j)(k l)");
  std::string word = text.substr(0, colon);
  Matching m(word.size(), -1);
  size_t pos = colon + 1;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::runtime_error("expected '(' in diagram pairs");
    size_t close = text.find(')', pos);
    if (close == std::string::npos)
      throw std::runtime_error("unclosed pair in diagram");
    std::istringstream pair_in(text.substr(pos + 1, close - pos - 1));
    int i = -1, j = -1;
    pair_in >> i >> j;
    if (i < 0 || j < 0 || i >= static_cast<int>(word.size()) ||
        j >= static_cast<int>(word.size()) || m[i] != -1 || m[j] != -1)
      throw std::runtime_error("bad pair in diagram: " + text);
    m[i] = j;
    m[j] = i;
    pos = close + 1;
  }
  for (int i = 0; i < static_cast<int>(word.size()); ++i)
    if (m[i] == -1) throw std::runtime_error("diagram pairing is not perfect");
  return {word, m};
}

}  // namespace tlf
