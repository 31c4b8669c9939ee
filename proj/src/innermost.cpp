#include "mlcore/innermost.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "mlcore/peel.hpp"

namespace mlcore {

std::uint32_t ThresholdTrie::lookup(std::span<const std::uint32_t> prefix) const {
  assert(prefix.size() == prefix_length_);
  const Node* node = &root_;
  for (std::uint32_t key : prefix) {
    auto it = node->children.find(key);
    if (it == node->children.end()) return 0;
    node = &it->second;
  }
  return node->value;
}

void ThresholdTrie::store(std::span<const std::uint32_t> prefix, std::uint32_t value) {
  assert(prefix.size() == prefix_length_);
  Node* node = &root_;
  for (std::uint32_t key : prefix) node = &node->children[key];
  node->value = std::max(node->value, value);
}

std::uint32_t last_layer_floor(const ThresholdTrie& trie, const CorenessVector& k) {
  const std::size_t prefix_len = trie.prefix_length();
  std::uint32_t floor = 0;
  std::vector<std::uint32_t> bumped(k.components().begin(),
                                    k.components().begin() + prefix_len);
  for (std::size_t l = 0; l < prefix_len; ++l) {
    ++bumped[l];
    floor = std::max(floor, trie.lookup(bumped));
    --bumped[l];
  }
  return floor;
}

std::optional<Core> innermost_core_in_layer(const MultilayerGraph& g, const VertexSet& S,
                                            const CorenessVector& k, layer_t along) {
  VertexSet base = peel_core(g, S, k);
  if (base.empty()) return std::nullopt;
  auto path = cores_path(g, base, k, along);
  if (path.empty()) return Core{std::move(base), k};
  PathEntry& last = path.back();
  return Core{std::move(last.core), std::move(last.vector)};
}

void rim_cores(const MultilayerGraph& g, const VertexSet& S, const CorenessVector& k,
               std::size_t r, ThresholdTrie& trie, std::vector<Core>& out) {
  const std::size_t layers = g.layer_count();
  if (r + 1 < layers) {
    // Recursion block: walk layer r upward and recurse on every step, highest
    // component first so that thresholds are in place for dominated prefixes.
    auto path = cores_path(g, S, k, static_cast<layer_t>(r));
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      rim_cores(g, it->core, it->vector, r + 1, trie, out);
    }
    rim_cores(g, S, k, r + 1, trie, out);
  } else {
    // Leaf block: raise the last layer from the recorded floor.
    const layer_t last = static_cast<layer_t>(layers - 1);
    CorenessVector query = k;
    query.set(last, last_layer_floor(trie, k));
    auto found = innermost_core_in_layer(g, S, query, last);
    std::span<const std::uint32_t> prefix(k.components().data(), layers - 1);
    if (found.has_value()) {
      trie.store(prefix, found->vector[last] + 1);
      out.push_back(std::move(*found));
    } else {
      trie.store(prefix, query[last]);
    }
  }
}

InnermostSet innermost_cores(const MultilayerGraph& g) {
  InnermostSet result;
  if (g.vertex_count() == 0) return result;

  const std::size_t layers = g.layer_count();
  if (layers == 0) {
    VertexSet all = g.all_vertices();
    result.cores.emplace(CorenessVector(), Core{std::move(all), CorenessVector()});
    return result;
  }

  // Process layers by non-decreasing density; |V| is shared, so edge counts
  // order identically and avoid float ties.
  std::vector<layer_t> order(layers);
  std::iota(order.begin(), order.end(), layer_t{0});
  std::stable_sort(order.begin(), order.end(), [&g](layer_t a, layer_t b) {
    return g.layer_edge_count(a) < g.layer_edge_count(b);
  });
  MultilayerGraph sorted = g.with_layer_order(order);

  ThresholdTrie trie(layers - 1);
  std::vector<Core> found;
  rim_cores(sorted, sorted.all_vertices(), CorenessVector::zeros(layers), 0, trie, found);

  for (Core& core : found) {
    std::vector<std::uint32_t> original(layers, 0);
    for (std::size_t i = 0; i < layers; ++i) original[order[i]] = core.vector[i];
    CorenessVector vec(std::move(original));
    result.cores.emplace(vec, Core{std::move(core.vertices), vec});
  }
  return result;
}

InnermostSet filter_innermost(const CoreDecomposition& d) {
  InnermostSet result;
  for (const auto& [vec, core] : d.cores()) {
    bool dominated = false;
    for (const auto& [other_vec, other] : d.cores()) {
      if (other_vec != vec && other_vec.dominates(vec)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) result.cores.emplace(vec, core);
  }
  return result;
}

}  // namespace mlcore
