#pragma once

#include <cstdint>
#include <vector>

#include "mlcore/decomposition.hpp"
#include "mlcore/graph.hpp"
#include "mlcore/types.hpp"

namespace mlcore {

struct MiningParams {
  std::vector<double> gamma;  // per-layer thresholds in (0, 1]
  double min_sup = 1.0;       // fraction of layers in (0, 1]
  std::uint32_t min_size = 2;
  std::size_t enum_cap = 30;  // refuse enumeration above this many candidates

  void validate(std::size_t layer_count) const;

  // ceil(min_sup * |L|) layers must support a solution.
  std::size_t required_layers(std::size_t layer_count) const;

  // ceil(gamma(l) * (min_size - 1)): the coreness a member of a minimum-size
  // solution must reach in a supporting layer.
  std::uint32_t degree_threshold(layer_t layer) const;
};

// True iff every vertex of S has at least gamma * (|S| - 1) neighbors within S
// in the given layer.
bool is_quasi_clique(const MultilayerGraph& g, const VertexSet& S, layer_t layer, double gamma);

// Union of all distinct cores whose maximal vector meets the per-layer degree
// thresholds in at least the required number of layers. Every qualifying
// quasi-clique is contained in this set. d must be the complete decomposition
// of g.
VertexSet prune_graph(const MultilayerGraph& g, const CoreDecomposition& d,
                      const MiningParams& params);

struct QuasiClique {
  VertexSet vertices;
  std::vector<layer_t> layers;  // layers in which the subgraph qualifies
};

struct QuasiCliqueSet {
  std::vector<QuasiClique> subgraphs;  // canonical order: by size, then members
  std::size_t size() const { return subgraphs.size(); }
};

// All maximal subgraphs of `restrict` of size >= min_size that are
// Gamma(l)-quasi-cliques in at least ceil(min_sup * |L|) layers. Set-
// enumeration-tree search with a candidate-degree upper bound per layer;
// refuses when |restrict| exceeds params.enum_cap.
QuasiCliqueSet mine_fcgqc(const MultilayerGraph& g, const VertexSet& restrict_to,
                          const MiningParams& params);

struct PrunedMiningResult {
  QuasiCliqueSet cliques;
  std::size_t pruned_vertex_count = 0;  // |V'|
};

// Decompose, prune to V', and mine on the pruned vertex set. Equals
// mine_fcgqc(g, V, params) on every input.
PrunedMiningResult mine_fcgqc_pruned(const MultilayerGraph& g, const MiningParams& params);

}  // namespace mlcore
