#pragma once

#include <functional>
#include <vector>

#include "mlcore/graph.hpp"
#include "mlcore/types.hpp"

namespace mlcore {

// Per-layer minimum degrees of the subgraph induced by C. By uniqueness of the
// maximal coreness vector this is the maximal vector of any core equal to C.
CorenessVector maximal_vector(const MultilayerGraph& g, const VertexSet& C);

// Largest subset of S whose induced subgraph has minimum degree >= k per
// layer. May be empty. Result is independent of removal order.
VertexSet peel_core(const MultilayerGraph& g, const VertexSet& S, const CorenessVector& k);

struct PathEntry {
  CorenessVector vector;
  VertexSet core;
};

// Cores obtained from S by raising the `along` component of k one step at a
// time: entries for k_along+1, k_along+2, ... while the core stays non-empty.
// Vertices whose degree in another layer drops below that layer's component
// are discarded as the raise cascades. S must already satisfy k.
//
// `keep`, when given, must be monotone under set shrinking (true on a set
// implies true on its supersets); the walk stops at the first core failing it
// and only passing entries are returned.
std::vector<PathEntry> cores_path(const MultilayerGraph& g, const VertexSet& S,
                                  const CorenessVector& k, layer_t along,
                                  const std::function<bool(const VertexSet&)>* keep = nullptr);

// Maximum single-layer core order per layer (the K_l bounds): K_l is the
// largest k such that the k-core of layer l alone is non-empty.
std::vector<std::uint32_t> single_layer_max_orders(const MultilayerGraph& g);

}  // namespace mlcore
