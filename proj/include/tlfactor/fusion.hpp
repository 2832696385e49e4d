#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlfactor/graph.hpp"
#include "tlfactor/quadratic.hpp"

namespace tlf {

struct SimpleObject {
  int id = 0;
  std::string name;
  int dual = 0;
  std::optional<Quad> dim;  // exact Frobenius-Perron dimension when known
};

/// Fusion ring data: simple objects with duals and the multiplicity table
/// N[x][y][z] for z < x (x) y.
class FusionRing {
 public:
  FusionRing() = default;
  FusionRing(std::vector<SimpleObject> simples, int unit)
      : simples_(std::move(simples)), unit_(unit) {
    int s = size();
    mult_.assign(static_cast<size_t>(s) * s * s, 0);
  }

  int size() const { return static_cast<int>(simples_.size()); }
  int unit() const { return unit_; }
  const std::vector<SimpleObject>& simples() const { return simples_; }
  const SimpleObject& simple(int i) const { return simples_.at(i); }
  int dual(int i) const { return simples_.at(i).dual; }

  int find(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (simples_[i].name == name) return i;
    return -1;
  }

  void set_dual(int i, int d) { simples_.at(i).dual = d; }

  int mult(int x, int y, int z) const {
    return mult_[(static_cast<size_t>(x) * size() + y) * size() + z];
  }
  void set_mult(int x, int y, int z, int n) {
    mult_[(static_cast<size_t>(x) * size() + y) * size() + z] = n;
  }

  bool dims_exact() const {
    for (const auto& s : simples_)
      if (!s.dim) return false;
    return true;
  }

 private:
  std::vector<SimpleObject> simples_;
  int unit_ = 0;
  std::vector<int> mult_;
};

/// Non-simple generator object sum m_z * z with its color label.
struct GeneratorObject {
  char color = 'a';
  std::vector<int> multiplicities;  // indexed by simple id

  bool symmetrically_self_dual(const FusionRing& ring) const {
    for (int z = 0; z < ring.size(); ++z)
      if (multiplicities[z] != multiplicities[ring.dual(z)]) return false;
    return true;
  }
};

struct FusionGraph {
  WeightedGraph graph;
  std::map<char, Quad> delta;        // loop parameter per color (exact path)
  std::map<char, double> delta_f;    // and as floats
  std::vector<int> simple_ids;       // simple behind each vertex
  std::vector<std::string> warnings;
};

/// Checks unit laws, Frobenius reciprocity, associativity and (when exact
/// dimensions are present) the dimension equation. Violations are returned
/// as data, one string per failed identity.
std::vector<std::string> validate_ring(const FusionRing& ring);

struct FPDimensions {
  std::vector<double> dims;
  std::vector<Quad> dims_exact;  // nonempty iff exact
  bool exact = false;
};

/// Frobenius-Perron weight vector: the unique d with d(unit) = 1 and
/// d(X)d(Y) = sum_Z N_{X,Y}^Z d(Z). Throws on reducible fusion data.
FPDimensions fp_dimensions(const FusionRing& ring);

/// Global (Frobenius-Perron) dimension sum_Z dim(Z)^2.
Quad global_dim_exact(const FusionRing& ring);
double global_dim(const FusionRing& ring);

/// Multiplicity vector of the tensor product of a word of generators,
/// starting from the unit object. Empty word gives the unit vector.
std::vector<long long> tensor_decompose(const FusionRing& ring,
                                        const std::vector<GeneratorObject>& word);

/// dim of the intertwiner space between two generator words.
long long hom_dim(const FusionRing& ring,
                  const std::vector<GeneratorObject>& alpha,
                  const std::vector<GeneratorObject>& beta);

/// Fusion graph with respect to the given generators: vertices are the
/// simples reachable from the unit, edges of color c have multiplicity
/// N_{v, Y_c}^w. Unreachable simples produce a warning, not an error.
FusionGraph build_fusion_graph(const FusionRing& ring,
                               const std::vector<GeneratorObject>& generators);

FusionGraph ball_subgraph(const FusionGraph& graph, int radius);

/// FP dimension of a generator object.
Quad generator_delta_exact(const FusionRing& ring, const GeneratorObject& g);
double generator_delta(const FusionRing& ring, const GeneratorObject& g);

}  // namespace tlf
