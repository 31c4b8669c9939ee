#include "mlcore/community.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "mlcore/errors.hpp"
#include "mlcore/score.hpp"

namespace mlcore {

std::size_t phi(const MultilayerGraph& g, const VertexSet& S, std::span<const layer_t> layers) {
  if (S.empty()) throw std::invalid_argument("phi of an empty vertex set is undefined");
  if (layers.empty()) throw std::invalid_argument("phi over an empty layer set is undefined");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (layer_t l : layers) best = std::min(best, min_degree(g, S, l));
  return best;
}

namespace {

std::vector<double> min_degree_profile(const MultilayerGraph& g, const VertexSet& S) {
  std::vector<char> in_set(g.vertex_count(), 0);
  for (vertex_t v : S) in_set[v] = 1;
  std::vector<double> mins(g.layer_count(), 0.0);
  for (layer_t l = 0; l < g.layer_count(); ++l) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (vertex_t u : S) {
      std::size_t d = 0;
      for (vertex_t v : g.neighbors(u, l)) d += in_set[v];
      best = std::min(best, d);
    }
    mins[l] = static_cast<double>(best);
  }
  return mins;
}

}  // namespace

std::pair<double, std::vector<layer_t>> theta(const MultilayerGraph& g, const VertexSet& S,
                                              double beta) {
  if (S.empty()) throw std::invalid_argument("theta of an empty vertex set is undefined");
  if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
  std::vector<double> mins = min_degree_profile(g, S);
  SubsetScore score = max_prefix_score(mins, beta);
  return {score.value, std::move(score.layers)};
}

double sigma(const CorenessVector& k, double beta) {
  if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
  std::vector<double> values(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) values[i] = static_cast<double>(k[i]);
  return max_prefix_score(values, beta).value;
}

namespace {

void validate_query(const MultilayerGraph& g, const CommunityQuery& query) {
  if (query.query_vertices.empty()) {
    throw std::invalid_argument("query vertex set must be non-empty");
  }
  if (g.vertex_count() == 0) throw std::invalid_argument("graph has no vertices");
  for (vertex_t v : query.query_vertices) {
    if (v >= g.vertex_count()) throw std::invalid_argument("query vertex out of range");
  }
  if (query.beta <= 0.0) throw std::invalid_argument("beta must be positive");
}

CommunityResult result_for(const MultilayerGraph& g, const Core& core, double beta) {
  CommunityResult result;
  result.vertices = core.vertices;
  result.vector = core.vector;
  auto [value, layers] = theta(g, core.vertices, beta);
  result.score = value;
  result.best_layers = std::move(layers);
  return result;
}

}  // namespace

CommunityResult community_search(const MultilayerGraph& g, const CommunityQuery& query) {
  validate_query(g, query);

  EngineHooks hooks;
  const VertexSet& required = query.query_vertices;
  hooks.admit = [&required](const VertexSet& s) { return s.contains_all(required); };

  CoreDecomposition visited;
  switch (query.strategy) {
    case SearchStrategy::bfs:
      visited = decompose_bfs(g, &hooks);
      break;
    case SearchStrategy::dfs:
      visited = decompose_dfs(g, DfsOptions{query.seed, LayerOrder::random}, &hooks);
      break;
    case SearchStrategy::hybrid:
      visited = decompose_hybrid(g, &hooks);
      break;
  }

  const Core* best = nullptr;
  double best_sigma = 0.0;
  for (const auto& [vec, core] : visited.cores()) {
    double s = sigma(vec, query.beta);
    bool better = false;
    if (best == nullptr || s > best_sigma) {
      better = true;
    } else if (s == best_sigma) {
      if (core.vertices.size() != best->vertices.size()) {
        better = core.vertices.size() < best->vertices.size();
      } else {
        better = vec < best->vector;
      }
    }
    if (better) {
      best = &core;
      best_sigma = s;
    }
  }
  if (best == nullptr) throw std::invalid_argument("no core contains the query vertices");
  return result_for(g, *best, query.beta);
}

CommunityResult community_bruteforce(const MultilayerGraph& g, const CommunityQuery& query,
                                     std::size_t max_vertices) {
  validate_query(g, query);
  const std::size_t n = g.vertex_count();
  if (n > max_vertices) {
    throw RefusalError("exhaustive community search refused: " + std::to_string(n) +
                       " vertices exceed the cap of " + std::to_string(max_vertices));
  }

  std::uint64_t query_mask = 0;
  for (vertex_t v : query.query_vertices) query_mask |= std::uint64_t{1} << v;

  CommunityResult best;
  bool have_best = false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::uint64_t full = mask | query_mask;
    if (full != mask) continue;  // must contain every query vertex
    std::vector<vertex_t> members;
    for (std::size_t v = 0; v < n; ++v) {
      if (full & (std::uint64_t{1} << v)) members.push_back(static_cast<vertex_t>(v));
    }
    VertexSet subset(std::move(members));
    auto [value, layers] = theta(g, subset, query.beta);
    bool better = !have_best || value > best.score ||
                  (value == best.score && subset.size() < best.vertices.size());
    if (better) {
      best.vector = maximal_vector(g, subset);
      best.vertices = std::move(subset);
      best.score = value;
      best.best_layers = std::move(layers);
      have_best = true;
    }
  }
  return best;
}

}  // namespace mlcore
