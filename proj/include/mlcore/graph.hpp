#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "mlcore/types.hpp"

namespace mlcore {

struct IngestReport {
  std::size_t edges_loaded = 0;
  std::size_t duplicates_ignored = 0;
  std::size_t self_loops_ignored = 0;
  std::size_t layers_seen = 0;
};

// Undirected multilayer graph over a shared vertex set. Vertices are dense
// indices 0..n-1 with an external label per vertex; adjacency is stored per
// layer in compressed sorted-neighbor form. Immutable after build(), so
// concurrent read-only runs over the same graph are safe.
class MultilayerGraph {
 public:
  MultilayerGraph() = default;

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t layer_count() const { return layers_.size(); }

  std::span<const vertex_t> neighbors(vertex_t u, layer_t layer) const {
    const LayerCsr& csr = layers_[layer];
    return std::span<const vertex_t>(csr.targets.data() + csr.offsets[u],
                                     csr.offsets[u + 1] - csr.offsets[u]);
  }

  std::size_t full_degree(vertex_t u, layer_t layer) const {
    return neighbors(u, layer).size();
  }

  std::size_t layer_edge_count(layer_t layer) const { return layers_[layer].edge_count; }
  bool has_edge(vertex_t u, vertex_t v, layer_t layer) const;

  const std::string& label(vertex_t u) const { return labels_[u]; }
  std::optional<vertex_t> find_vertex(std::string_view label) const;

  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }

  // Copy with layers rearranged so that layer i of the result is layer
  // order[i] of this graph.
  MultilayerGraph with_layer_order(std::span<const layer_t> order) const;

 private:
  friend class GraphBuilder;

  struct LayerCsr {
    std::vector<std::size_t> offsets;
    std::vector<vertex_t> targets;
    std::size_t edge_count = 0;
  };

  std::vector<LayerCsr> layers_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, vertex_t> label_index_;
};

// Accumulates edges (dropping duplicates and self-loops) and produces an
// immutable MultilayerGraph.
class GraphBuilder {
 public:
  vertex_t intern(std::string_view label);
  void ensure_vertices(std::size_t n);
  void add_edge(std::string_view u, std::string_view v, layer_t layer);
  void add_edge(vertex_t u, vertex_t v, layer_t layer);
  void ensure_layer(layer_t layer);

  const IngestReport& report() const { return report_; }
  MultilayerGraph build();

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, vertex_t> label_index_;
  std::vector<std::unordered_set<std::uint64_t>> layer_edges_;
  std::vector<std::vector<std::pair<vertex_t, vertex_t>>> edge_lists_;
  IngestReport report_;
};

struct LoadResult {
  MultilayerGraph graph;
  IngestReport report;
};

// Text edge-list format: one edge per line, `<source> <target> <layer>`,
// `#` comments and blank lines ignored.
LoadResult load_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const MultilayerGraph& g);

// deg_S(u, layer): number of neighbors of u in `layer` lying in S. u must be in S.
std::size_t degree(const MultilayerGraph& g, const VertexSet& S, vertex_t u, layer_t layer);

// mu(S, layer): minimum of degree() over the members of S. S must be non-empty.
std::size_t min_degree(const MultilayerGraph& g, const VertexSet& S, layer_t layer);

// |E_layer| / |V|.
double layer_density(const MultilayerGraph& g, layer_t layer);

}  // namespace mlcore
