#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "mlcore/graph.hpp"
#include "mlcore/peel.hpp"
#include "mlcore/types.hpp"

namespace mlcore {

struct TraversalStats {
  std::size_t cores_computed = 0;  // peeling work that produced a non-empty core
  std::size_t cores_visited = 0;   // lattice nodes enumerated/examined
  std::size_t output_cores = 0;    // distinct cores stored
};

struct Core {
  VertexSet vertices;
  CorenessVector vector;  // maximal coreness vector: per-layer minimum degrees
};

// All non-empty distinct cores keyed by maximal coreness vector, plus
// traversal statistics of the engine that produced them.
class CoreDecomposition {
 public:
  const std::map<CorenessVector, Core>& cores() const { return cores_; }
  const TraversalStats& stats() const { return stats_; }
  std::size_t size() const { return cores_.size(); }
  std::size_t layer_count() const { return layer_count_; }

  // Resolves any vector (maximal or not) to its distinct core: the largest
  // stored core whose maximal vector dominates k, which equals
  // peel_core(g, V, k). Returns nullptr when that core is empty.
  const Core* lookup(const CorenessVector& k) const;

 private:
  friend class DecompositionBuilder;
  std::map<CorenessVector, Core> cores_;
  TraversalStats stats_;
  std::size_t layer_count_ = 0;
};

// Traversal customization shared by the engines. `admit` replaces the
// non-empty check on freshly peeled cores; it must be monotone under set
// shrinking (used for query-vertex containment in community search). `on_node`
// receives one event per examined lattice node (BFS and HYBRID only).
struct NodeEvent {
  const CorenessVector& vector;
  std::size_t fathers_seen = 0;
  bool peeled = false;
  bool kept = false;
  const VertexSet* result = nullptr;  // set when peeled
  std::span<const std::shared_ptr<const VertexSet>> fathers;
};

struct EngineHooks {
  std::function<bool(const VertexSet&)> admit;
  std::function<void(const NodeEvent&)> on_node;
};

enum class LayerOrder { random, density };

struct DfsOptions {
  std::uint64_t seed = kDefaultSeed;
  LayerOrder order = LayerOrder::random;
};

// Full-grid enumeration bounded by the single-layer maxima; the correctness
// oracle for the other engines.
CoreDecomposition decompose_naive(const MultilayerGraph& g);

// Level-order lattice traversal peeling each node from the intersection of
// its father cores once all fathers have been seen.
CoreDecomposition decompose_bfs(const MultilayerGraph& g, const EngineHooks* hooks = nullptr);

// Layer-by-layer schedule of cores_path runs; layer order is seeded random or
// by non-decreasing density.
CoreDecomposition decompose_dfs(const MultilayerGraph& g, const DfsOptions& options = {},
                                const EngineHooks* hooks = nullptr);

// BFS seeded with one cores_path per layer and equipped with the look-ahead
// rule: after computing a core, every vector between its own and its
// min-degree vector denotes the same core and is marked instead of peeled.
CoreDecomposition decompose_hybrid(const MultilayerGraph& g, const EngineHooks* hooks = nullptr);

}  // namespace mlcore
