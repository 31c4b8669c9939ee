#include "mlcore/graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "mlcore/errors.hpp"

namespace mlcore {

namespace {

std::uint64_t edge_key(vertex_t u, vertex_t v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

bool MultilayerGraph::has_edge(vertex_t u, vertex_t v, layer_t layer) const {
  auto adj = neighbors(u, layer);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<vertex_t> MultilayerGraph::find_vertex(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

MultilayerGraph MultilayerGraph::with_layer_order(std::span<const layer_t> order) const {
  if (order.size() != layers_.size()) {
    throw std::invalid_argument("layer order size does not match layer count");
  }
  MultilayerGraph g;
  g.labels_ = labels_;
  g.label_index_ = label_index_;
  g.layers_.reserve(layers_.size());
  for (layer_t l : order) g.layers_.push_back(layers_.at(l));
  return g;
}

vertex_t GraphBuilder::intern(std::string_view label) {
  auto it = label_index_.find(std::string(label));
  if (it != label_index_.end()) return it->second;
  vertex_t id = static_cast<vertex_t>(labels_.size());
  labels_.emplace_back(label);
  label_index_.emplace(labels_.back(), id);
  return id;
}

void GraphBuilder::ensure_vertices(std::size_t n) {
  while (labels_.size() < n) intern(std::to_string(labels_.size()));
}

void GraphBuilder::ensure_layer(layer_t layer) {
  if (layer_edges_.size() <= layer) {
    layer_edges_.resize(layer + 1);
    edge_lists_.resize(layer + 1);
  }
}

void GraphBuilder::add_edge(std::string_view u, std::string_view v, layer_t layer) {
  add_edge(intern(u), intern(v), layer);
}

void GraphBuilder::add_edge(vertex_t u, vertex_t v, layer_t layer) {
  ensure_layer(layer);
  if (u == v) {
    ++report_.self_loops_ignored;
    return;
  }
  if (!layer_edges_[layer].insert(edge_key(u, v)).second) {
    ++report_.duplicates_ignored;
    return;
  }
  edge_lists_[layer].emplace_back(u, v);
  ++report_.edges_loaded;
}

MultilayerGraph GraphBuilder::build() {
  report_.layers_seen = layer_edges_.size();

  MultilayerGraph g;
  g.labels_ = std::move(labels_);
  g.label_index_ = std::move(label_index_);

  const std::size_t n = g.labels_.size();
  g.layers_.resize(edge_lists_.size());
  for (std::size_t l = 0; l < edge_lists_.size(); ++l) {
    auto& csr = g.layers_[l];
    csr.edge_count = edge_lists_[l].size();
    std::vector<std::size_t> deg(n, 0);
    for (auto [u, v] : edge_lists_[l]) {
      ++deg[u];
      ++deg[v];
    }
    csr.offsets.assign(n + 1, 0);
    for (std::size_t u = 0; u < n; ++u) csr.offsets[u + 1] = csr.offsets[u] + deg[u];
    csr.targets.resize(csr.offsets[n]);
    std::vector<std::size_t> cursor(csr.offsets.begin(), csr.offsets.end() - 1);
    for (auto [u, v] : edge_lists_[l]) {
      csr.targets[cursor[u]++] = v;
      csr.targets[cursor[v]++] = u;
    }
    for (std::size_t u = 0; u < n; ++u) {
      std::sort(csr.targets.begin() + csr.offsets[u], csr.targets.begin() + csr.offsets[u + 1]);
    }
  }
  return g;
}

namespace {

bool parse_layer_token(const std::string& token, layer_t& out) {
  if (token.empty()) return false;
  for (char c : token) {
    if (c < '0' || c > '9') return false;
  }
  unsigned long long value = 0;
  try {
    value = std::stoull(token);
  } catch (const std::exception&) {
    return false;
  }
  if (value > std::numeric_limits<layer_t>::max()) return false;
  out = static_cast<layer_t>(value);
  return true;
}

}  // namespace

LoadResult load_edge_list(std::istream& in) {
  GraphBuilder builder;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string u, v, layer_token, extra;
    if (!(fields >> u)) continue;  // blank line
    if (u[0] == '#') continue;
    if (!(fields >> v >> layer_token)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected `<source> <target> <layer>`");
    }
    if (fields >> extra) {
      throw ParseError("line " + std::to_string(line_no) + ": trailing token `" + extra + "`");
    }
    layer_t layer = 0;
    if (!parse_layer_token(layer_token, layer)) {
      throw ParseError("line " + std::to_string(line_no) + ": layer `" + layer_token +
                       "` is not a non-negative integer");
    }
    builder.add_edge(u, v, layer);
  }
  IngestReport report = builder.report();
  return LoadResult{builder.build(), report};
}

void write_edge_list(std::ostream& out, const MultilayerGraph& g) {
  for (layer_t l = 0; l < g.layer_count(); ++l) {
    for (vertex_t u = 0; u < g.vertex_count(); ++u) {
      for (vertex_t v : g.neighbors(u, l)) {
        if (u < v) out << g.label(u) << ' ' << g.label(v) << ' ' << l << '\n';
      }
    }
  }
}

std::size_t degree(const MultilayerGraph& g, const VertexSet& S, vertex_t u, layer_t layer) {
  if (layer >= g.layer_count()) throw std::invalid_argument("layer out of range");
  if (!S.contains(u)) throw std::invalid_argument("vertex not in the queried set");
  std::size_t d = 0;
  for (vertex_t v : g.neighbors(u, layer)) d += S.contains(v);
  return d;
}

std::size_t min_degree(const MultilayerGraph& g, const VertexSet& S, layer_t layer) {
  if (S.empty()) throw std::invalid_argument("minimum degree of an empty set is undefined");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (vertex_t u : S) best = std::min(best, degree(g, S, u, layer));
  return best;
}

double layer_density(const MultilayerGraph& g, layer_t layer) {
  if (layer >= g.layer_count()) throw std::invalid_argument("layer out of range");
  if (g.vertex_count() == 0) throw std::invalid_argument("density of an empty graph is undefined");
  return static_cast<double>(g.layer_edge_count(layer)) / static_cast<double>(g.vertex_count());
}

}  // namespace mlcore
