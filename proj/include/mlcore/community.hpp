#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mlcore/decomposition.hpp"
#include "mlcore/graph.hpp"
#include "mlcore/types.hpp"

namespace mlcore {

enum class SearchStrategy { bfs, dfs, hybrid };

struct CommunityQuery {
  VertexSet query_vertices;
  double beta = 1.0;
  SearchStrategy strategy = SearchStrategy::hybrid;
  std::uint64_t seed = kDefaultSeed;  // dfs layer order
};

struct CommunityResult {
  VertexSet vertices;
  double score = 0.0;  // theta of the vertex set, recomputed
  std::vector<layer_t> best_layers;
  CorenessVector vector;
};

// phi(S, L^): min over the given layers of the minimum in-S degree.
std::size_t phi(const MultilayerGraph& g, const VertexSet& S, std::span<const layer_t> layers);

// theta(S) = max over layer subsets of phi(S, subset) * |subset|^beta.
std::pair<double, std::vector<layer_t>> theta(const MultilayerGraph& g, const VertexSet& S,
                                              double beta);

// sigma over a coreness vector: max over layer subsets of
// (min component in subset) * |subset|^beta.
double sigma(const CorenessVector& k, double beta);

// Runs the chosen decomposition engine restricted to cores containing the
// query vertices and returns one maximizing sigma; its theta equals the
// exhaustive optimum. Ties break toward fewer vertices, then smaller vector.
CommunityResult community_search(const MultilayerGraph& g, const CommunityQuery& query);

// Exhaustive optimum of theta over all supersets of the query vertices;
// refuses graphs larger than max_vertices.
CommunityResult community_bruteforce(const MultilayerGraph& g, const CommunityQuery& query,
                                     std::size_t max_vertices = 16);

}  // namespace mlcore
