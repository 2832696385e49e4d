#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "tlfactor/diagrams.hpp"
#include "tlfactor/fusion.hpp"
#include "tlfactor/gjs.hpp"
#include "tlfactor/json_io.hpp"
#include "tlfactor/spectra.hpp"
#include "tlfactor/vnfactor.hpp"

namespace {

using tlf::json;

double default_tolerance() {
  if (const char* env = std::getenv("TLFACTOR_TOL")) {
    try {
      return std::stod(env);
    } catch (...) {
    }
  }
  return 1e-9;
}

void write_report(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot write " + output);
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
  }
}

void write_json(const json& j, const std::string& output) {
  write_report(j.dump(2), output);
}

std::map<char, double> parse_delta_list(const std::vector<std::string>& items) {
  std::map<char, double> delta;
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq != 1 || item.size() < 3)
      throw std::runtime_error("delta assignments look like c=2.0");
    delta[item[0]] = std::stod(item.substr(2));
  }
  return delta;
}

json factor_report_json(const tlf::FactorReport& rep) {
  json j;
  if (rep.finite) {
    if (rep.exact)
      j["t"] = tlf::quad_report(rep.t_exact);
    else
      j["t"] = {{"float", rep.t}};
  } else {
    json growth = json::array();
    for (size_t i = 0; i < rep.growth.size(); ++i) {
      json gk;
      gk["radius"] = static_cast<int>(i + 1);
      gk["t"] = tlf::quad_report(rep.growth_exact[i]);
      growth.push_back(gk);
    }
    j["growth"] = growth;
    j["diverging"] = rep.diverging;
    if (rep.diverging) j["limit"] = "infinite (L(F_inf) diagnostic)";
  }
  if (!rep.warnings.empty()) j["warnings"] = rep.warnings;
  return j;
}

json decomposition_json(const tlf::VNDecomposition<tlf::Quad>& dec) {
  json blocks = json::array();
  for (const auto& b : dec.blocks) {
    json bj;
    switch (b.kind) {
      case tlf::BlockKind::InterpolatedFree:
        bj["kind"] = "interpolated_free";
        bj["t"] = tlf::quad_report(b.param);
        break;
      case tlf::BlockKind::Matrix:
        bj["kind"] = b.matrix_dim == 1 ? "atom" : "matrix";
        if (b.matrix_dim != 1) bj["n"] = b.matrix_dim;
        break;
      case tlf::BlockKind::DiffuseHyperfinite:
        bj["kind"] = "diffuse_hyperfinite";
        break;
    }
    bj["trace"] = tlf::quad_report(b.trace);
    json markers;
    for (const auto& [name, share] : b.markers)
      markers[name] = tlf::quad_report(share);
    if (!markers.empty()) bj["markers"] = markers;
    blocks.push_back(bj);
  }
  json j;
  j["blocks"] = blocks;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"colored Temperley-Lieb / GJS factor calculus"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output;
  app.add_option("--output", output, "write the report to a file");

  // validate
  auto* validate = app.add_subcommand("validate", "check fusion ring axioms");
  std::string validate_path;
  validate->add_option("category", validate_path)->required();

  // fp-dims
  auto* fpdims = app.add_subcommand("fp-dims", "Frobenius-Perron dimensions");
  std::string fpdims_path;
  fpdims->add_option("category", fpdims_path)->required();

  // fusion-graph
  auto* fgraph = app.add_subcommand("fusion-graph", "build the fusion graph");
  std::string fgraph_path, fgraph_format = "json";
  fgraph->add_option("category", fgraph_path)->required();
  fgraph->add_option("--format", fgraph_format, "json or dot");

  // hom-dim
  auto* homdim = app.add_subcommand("hom-dim", "intertwiner space dimension");
  std::string homdim_path, alpha_word, beta_word;
  homdim->add_option("category", homdim_path)->required();
  homdim->add_option("--alpha", alpha_word, "word over generator colors");
  homdim->add_option("--beta", beta_word, "word over generator colors");

  // tl-enumerate
  auto* tlenum = app.add_subcommand("tl-enumerate", "noncrossing matchings");
  std::string tlenum_word, tlenum_format = "text";
  tlenum->add_option("--word", tlenum_word)->required();
  tlenum->add_option("--format", tlenum_format, "text or json");

  // tl-gram
  auto* tlgram = app.add_subcommand("tl-gram", "Gram matrix of a box space");
  std::string tlgram_word;
  std::vector<std::string> tlgram_delta;
  tlgram->add_option("--word", tlgram_word)->required();
  tlgram->add_option("--delta", tlgram_delta, "loop parameters, e.g. c=2.0");

  // phi-check
  auto* phicheck = app.add_subcommand(
      "phi-check", "verify the orthogonalization isomorphism");
  int phi_maxlen = 6;
  std::string phi_colors = "cd";
  std::string phi_apply;
  phicheck->add_option("--max-len", phi_maxlen, "total boundary length bound");
  phicheck->add_option("--colors", phi_colors, "color alphabet");
  phicheck->add_option("--apply", phi_apply,
                       "print the image of a diagram, e.g. \"cc:(0 1)\"");

  // moments
  auto* moments = app.add_subcommand("moments", "graph moment sequences");
  std::string moments_graph, moments_word;
  int moments_n = 6;
  std::string cup_color;
  moments->add_option("graph", moments_graph)->required();
  moments->add_option("--word", moments_word, "color word of the element");
  moments->add_option("-n,--order", moments_n, "number of moments");
  moments->add_option("--cup", cup_color,
                      "also report cup moments of this color at the base");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "perturbed shift spectrum");
  double spec_delta = 4.0;
  int spec_size = 1000, spec_buckets = 40;
  spectrum->add_option("--delta", spec_delta)->required();
  spectrum->add_option("--size", spec_size)->required();
  spectrum->add_option("--buckets", spec_buckets);

  // graph-algebra
  auto* galg = app.add_subcommand("graph-algebra", "N(Gamma) decomposition");
  std::string galg_path;
  galg->add_option("graph", galg_path)->required();

  // identify-factor
  auto* identify = app.add_subcommand("identify-factor",
                                      "GJS factor of a category");
  std::string identify_path;
  int identify_radius = 6;
  identify->add_option("category", identify_path)->required();
  identify->add_option("--radius", identify_radius,
                       "ball radius bound for infinite data");

  // closed-form
  auto* closed = app.add_subcommand("closed-form", "closed-form parameters");
  std::string closed_path, closed_gen;
  closed->add_option("category", closed_path)->required();
  closed->add_option("--generator", closed_gen, "generating simple object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (validate->parsed()) {
    auto spec = tlf::load_category(validate_path);
    if (spec.infinite) {
      write_json({{"violations", json::array()},
                  {"note", "infinite family, validated by construction"}},
                 output);
      return 0;
    }
    auto violations = tlf::validate_ring(spec.ring);
    json j;
    j["violations"] = violations;
    write_json(j, output);
    return 0;
  }

  if (fpdims->parsed()) {
    auto spec = tlf::load_category(fpdims_path);
    auto fp = tlf::fp_dimensions(spec.ring);
    json j;
    json dims = json::array();
    for (int i = 0; i < spec.ring.size(); ++i) {
      json d;
      d["name"] = spec.ring.simple(i).name;
      if (fp.exact) d["exact"] = fp.dims_exact[i].to_string();
      d["float"] = fp.dims[i];
      dims.push_back(d);
    }
    j["dims"] = dims;
    if (fp.exact)
      j["global_dim"] = tlf::quad_report(tlf::global_dim_exact(spec.ring));
    else
      j["global_dim"] = {{"float", tlf::global_dim(spec.ring)}};
    write_json(j, output);
    return 0;
  }

  if (fgraph->parsed()) {
    auto spec = tlf::load_category(fgraph_path);
    auto graph = tlf::build_fusion_graph(spec.ring, spec.generators);
    if (fgraph_format == "dot") {
      write_report(tlf::emit_dot(graph.graph), output);
    } else {
      json j = tlf::graph_to_json(graph.graph);
      json deltas;
      for (const auto& [c, d] : graph.delta_f) {
        if (graph.delta.count(c))
          deltas[std::string(1, c)] = tlf::quad_report(graph.delta.at(c));
        else
          deltas[std::string(1, c)] = {{"float", d}};
      }
      j["delta"] = deltas;
      if (!graph.warnings.empty()) j["warnings"] = graph.warnings;
      write_json(j, output);
    }
    return 0;
  }

  if (homdim->parsed()) {
    auto spec = tlf::load_category(homdim_path);
    auto word_of = [&](const std::string& letters) {
      std::vector<tlf::GeneratorObject> word;
      for (char c : letters) {
        bool found = false;
        for (const auto& g : spec.generators)
          if (g.color == c) {
            word.push_back(g);
            found = true;
          }
        if (!found)
          throw std::domain_error(std::string("no generator of color '") + c +
                                  "'");
      }
      return word;
    };
    long long dim =
        tlf::hom_dim(spec.ring, word_of(alpha_word), word_of(beta_word));
    write_json({{"alpha", alpha_word}, {"beta", beta_word}, {"dim", dim}},
               output);
    return 0;
  }

  if (tlenum->parsed()) {
    auto diagrams = tlf::enumerate_ctl(tlenum_word);
    if (tlenum_format == "json") {
      json arr = json::array();
      for (const auto& m : diagrams) {
        json pairs = json::array();
        for (int i = 0; i < static_cast<int>(m.size()); ++i)
          if (m[i] > i) pairs.push_back({i, m[i]});
        arr.push_back({{"pairs", pairs}});
      }
      write_json({{"word", tlenum_word},
                  {"count", diagrams.size()},
                  {"diagrams", arr}},
                 output);
    } else {
      std::string text;
      for (const auto& m : diagrams)
        text += tlf::diagram_to_string(tlenum_word, m) + "\n";
      text += std::to_string(diagrams.size()) + " diagram(s)\n";
      write_report(text, output);
    }
    return 0;
  }

  if (tlgram->parsed()) {
    auto delta = parse_delta_list(tlgram_delta);
    for (char c : tlgram_word)
      if (!delta.count(c)) delta[c] = 2.0;
    auto g = tlf::gram_matrix(tlgram_word, delta);
    int n = static_cast<int>(tlf::enumerate_ctl(tlgram_word).size());
    json j;
    j["word"] = tlgram_word;
    j["size"] = n;
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
      json row = json::array();
      for (int k = 0; k < n; ++k) row.push_back(g[i * n + k]);
      rows.push_back(row);
    }
    j["matrix"] = rows;
    double lambda = tlf::smallest_eigenvalue(g, n);
    j["smallest_eigenvalue"] = lambda;
    j["positive_definite"] = n == 0 || lambda > default_tolerance();
    write_json(j, output);
    return 0;
  }

  if (phicheck->parsed()) {
    if (!phi_apply.empty()) {
      auto [word, m] = tlf::parse_diagram(phi_apply);
      auto image = tlf::phi(tlf::TLElement::diagram(word, m));
      json j;
      j["diagram"] = phi_apply;
      j["phi"] = tlf::element_to_json(image);
      write_json(j, output);
      return 0;
    }
    // all diagram pairs over the alphabet with |alpha| + |beta| <= max-len
    long long pairs = 0;
    bool hom_ok = true, star_ok = true, trace_ok = true, inv_ok = true;
    std::vector<std::string> words{""};
    for (int len = 1; len <= phi_maxlen; ++len) {
      size_t begin = 0, end = words.size();
      std::vector<std::string> next;
      for (size_t i = begin; i < end; ++i)
        if (static_cast<int>(words[i].size()) == len - 1)
          for (char c : phi_colors) next.push_back(words[i] + c);
      for (auto& w : next) words.push_back(w);
    }
    for (const auto& wa : words) {
      for (const auto& wb : words) {
        if (static_cast<int>(wa.size() + wb.size()) > phi_maxlen) continue;
        for (const auto& ma : tlf::enumerate_ctl(wa)) {
          auto x = tlf::TLElement::diagram(wa, ma);
          auto px = tlf::phi(x);
          if (tlf::phi_inverse(px) != x) inv_ok = false;
          if (tlf::trace_star(px) != tlf::trace_wedge(x)) trace_ok = false;
          if (tlf::phi(tlf::involution(x)) != tlf::involution(px))
            star_ok = false;
          for (const auto& mb : tlf::enumerate_ctl(wb)) {
            auto y = tlf::TLElement::diagram(wb, mb);
            if (tlf::phi(tlf::wedge(x, y)) != tlf::star(px, tlf::phi(y)))
              hom_ok = false;
            ++pairs;
          }
        }
      }
    }
    json j;
    j["pairs_checked"] = pairs;
    j["homomorphism"] = hom_ok;
    j["star_compatibility"] = star_ok;
    j["trace_transport"] = trace_ok;
    j["round_trip"] = inv_ok;
    write_json(j, output);
    return !(hom_ok && star_ok && trace_ok && inv_ok);
  }

  if (moments->parsed()) {
    auto graph = tlf::load_graph(moments_graph);
    auto colors = graph.colors();
    auto known = [&](char c) {
      return std::find(colors.begin(), colors.end(), c) != colors.end();
    };
    for (char c : moments_word)
      if (!known(c))
        throw std::domain_error(std::string("color '") + c +
                                "' does not appear in the graph");
    if (!cup_color.empty() && !known(cup_color[0]))
      throw std::domain_error("cup color does not appear in the graph");
    json j;
    if (graph.exact) {
      tlf::MomentContext<tlf::Quad> ctx(graph);
      if (!moments_word.empty()) {
        auto seq = tlf::word_moments(ctx, moments_word, moments_n);
        json arr = json::array();
        for (const auto& s : seq) arr.push_back(tlf::quad_report(s));
        j["word"] = moments_word;
        j["moments"] = arr;
      }
      if (!cup_color.empty()) {
        json arr = json::array();
        for (int k = 1; k <= moments_n; ++k)
          arr.push_back(tlf::quad_report(
              tlf::cup_moment(ctx, cup_color[0], k, graph.base)));
        j["cup"] = arr;
      }
    } else {
      tlf::MomentContext<double> ctx(graph);
      if (!moments_word.empty()) {
        auto seq = tlf::word_moments(ctx, moments_word, moments_n);
        j["word"] = moments_word;
        j["moments"] = seq;
      }
      if (!cup_color.empty()) {
        json arr = json::array();
        for (int k = 1; k <= moments_n; ++k)
          arr.push_back(tlf::cup_moment(ctx, cup_color[0], k, graph.base));
        j["cup"] = arr;
      }
    }
    write_json(j, output);
    return 0;
  }

  if (spectrum->parsed()) {
    tlf::PerturbedShift p{spec_delta, spec_size};
    auto t = tlf::build_matrix(p);
    auto eigs = tlf::tridiag_eigenvalues(t);
    auto hist = tlf::spectrum_histogram(eigs, -2.0, 2.0, spec_buckets);
    json j;
    j["delta"] = spec_delta;
    j["size"] = spec_size;
    j["min"] = eigs.front();
    j["max"] = eigs.back();
    j["histogram"] = hist;
    write_json(j, output);
    return 0;
  }

  if (galg->parsed()) {
    auto graph = tlf::load_graph(galg_path);
    if (!graph.exact)
      throw std::domain_error("graph-algebra report needs exact weights");
    auto dec = tlf::graph_algebra<tlf::Quad>(graph);
    json j = decomposition_json(dec);
    j["fdim"] = tlf::quad_report(tlf::fdim(dec));
    write_json(j, output);
    return 0;
  }

  if (identify->parsed()) {
    auto spec = tlf::load_category(identify_path);
    tlf::FactorReport rep;
    if (spec.infinite) {
      tlf::GrowthOptions opt;
      opt.max_radius = identify_radius;
      rep = tlf::growth_diagnostic(
          [&](int k) {
            return tlf::free_group_ball(spec.infinite->rank,
                                        spec.infinite->colors, k);
          },
          opt);
    } else {
      rep = tlf::identify_factor(spec.ring, spec.generators);
    }
    write_json(factor_report_json(rep), output);
    return 0;
  }

  if (closed->parsed()) {
    auto spec = tlf::load_category(closed_path);
    if (spec.infinite)
      throw std::domain_error("closed form needs finitely many simples");
    json j;
    if (!closed_gen.empty()) {
      int x = spec.ring.find(closed_gen);
      if (x < 0) throw std::domain_error("unknown simple: " + closed_gen);
      if (spec.ring.dims_exact())
        j["t"] = tlf::quad_report(tlf::closed_form_t_exact(spec.ring, x));
      else
        j["t"] = {{"float", tlf::closed_form_t(spec.ring, x)}};
    }
    if (spec.ring.dims_exact())
      j["s"] = tlf::quad_report(tlf::closed_form_s_exact(spec.ring));
    else
      j["s"] = {{"float", tlf::closed_form_s(spec.ring)}};
    write_json(j, output);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
