#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "mlcore/decomposition.hpp"
#include "mlcore/graph.hpp"
#include "mlcore/types.hpp"

namespace mlcore {

// Nested threshold maps keyed by coreness-vector prefixes (all layers but the
// last). A leaf holds the minimum last-layer order a core with that prefix
// must reach to be non-dominated; absent paths read as 0, and stored values
// only ever grow.
class ThresholdTrie {
 public:
  explicit ThresholdTrie(std::size_t prefix_length) : prefix_length_(prefix_length) {}

  std::uint32_t lookup(std::span<const std::uint32_t> prefix) const;
  void store(std::span<const std::uint32_t> prefix, std::uint32_t value);

  std::size_t prefix_length() const { return prefix_length_; }

 private:
  struct Node {
    std::map<std::uint32_t, Node> children;
    std::uint32_t value = 0;
  };
  std::size_t prefix_length_;
  Node root_;
};

// Floor for the last-layer component of k: the maximum threshold recorded for
// the |L|-1 prefixes obtained by bumping one non-last component of k.
std::uint32_t last_layer_floor(const ThresholdTrie& trie, const CorenessVector& k);

// Cores whose maximal vectors are pairwise non-dominated.
struct InnermostSet {
  std::map<CorenessVector, Core> cores;
  std::size_t size() const { return cores.size(); }
};

// The core with the largest `along` component reachable from S under the other
// components of k, with k's `along` component as a floor. The returned vector
// is k with the `along` component raised to the reached maximum. Empty floor
// core gives nullopt.
std::optional<Core> innermost_core_in_layer(const MultilayerGraph& g, const VertexSet& S,
                                            const CorenessVector& k, layer_t along);

// Recursive right-inner-most search over layers r..|L|-1 of g (whose layers
// must already be in processing order). Appends found cores to out.
void rim_cores(const MultilayerGraph& g, const VertexSet& S, const CorenessVector& k,
               std::size_t r, ThresholdTrie& trie, std::vector<Core>& out);

// All inner-most cores, computed directly without a full decomposition.
// Layers are processed by non-decreasing density internally; output vectors
// are in the graph's original layer order.
InnermostSet innermost_cores(const MultilayerGraph& g);

// Baseline: keep the cores of a full decomposition whose maximal vectors are
// not dominated by any other entry's.
InnermostSet filter_innermost(const CoreDecomposition& d);

}  // namespace mlcore
