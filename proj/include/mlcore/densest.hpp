#pragma once

#include <utility>
#include <vector>

#include "mlcore/graph.hpp"
#include "mlcore/score.hpp"
#include "mlcore/types.hpp"

namespace mlcore {

struct DensestResult {
  VertexSet vertices;
  double delta_value = 0.0;
  std::vector<layer_t> best_layers;
  double beta = 1.0;
};

// Per-layer average-degree densities |E_l[S]| / |S| of the induced subgraph.
std::vector<double> induced_densities(const MultilayerGraph& g, const VertexSet& S);

// delta(S) = max over layer subsets of (min in-subset density) * |subset|^beta,
// with one attaining subset. S non-empty, beta > 0.
std::pair<double, std::vector<layer_t>> delta(const MultilayerGraph& g, const VertexSet& S,
                                              double beta);

enum class DensestMode { full_decomposition, innermost_only };

// Core-based approximation: the core of the decomposition (or of the
// inner-most set) maximizing delta. Guarantees
// delta(result) >= delta(optimum) / (2 |L|^beta). Ties break toward fewer
// vertices, then lexicographically smaller maximal vector.
DensestResult densest_subgraph(const MultilayerGraph& g, double beta,
                               DensestMode mode = DensestMode::full_decomposition);

// Exhaustive optimum over all non-empty vertex subsets; refuses graphs larger
// than max_vertices.
DensestResult densest_bruteforce(const MultilayerGraph& g, double beta,
                                 std::size_t max_vertices = 16);

}  // namespace mlcore
