#include "mlcore/densest.hpp"

#include <stdexcept>
#include <string>

#include "mlcore/decomposition.hpp"
#include "mlcore/errors.hpp"
#include "mlcore/innermost.hpp"

namespace mlcore {

std::vector<double> induced_densities(const MultilayerGraph& g, const VertexSet& S) {
  std::vector<char> in_set(g.vertex_count(), 0);
  for (vertex_t v : S) in_set[v] = 1;

  std::vector<double> densities(g.layer_count(), 0.0);
  for (layer_t l = 0; l < g.layer_count(); ++l) {
    std::size_t edges = 0;
    for (vertex_t u : S) {
      for (vertex_t v : g.neighbors(u, l)) {
        if (v > u && in_set[v]) ++edges;
      }
    }
    densities[l] = static_cast<double>(edges) / static_cast<double>(S.size());
  }
  return densities;
}

std::pair<double, std::vector<layer_t>> delta(const MultilayerGraph& g, const VertexSet& S,
                                              double beta) {
  if (S.empty()) throw std::invalid_argument("delta of an empty vertex set is undefined");
  if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
  std::vector<double> densities = induced_densities(g, S);
  SubsetScore score = max_prefix_score(densities, beta);
  return {score.value, std::move(score.layers)};
}

namespace {

DensestResult pick_best(const MultilayerGraph& g, double beta,
                        const std::vector<const VertexSet*>& candidates) {
  const VertexSet* best = nullptr;
  double best_value = 0.0;
  std::vector<layer_t> best_layers;
  CorenessVector best_vector;
  for (const VertexSet* candidate : candidates) {
    auto [value, layers] = delta(g, *candidate, beta);
    CorenessVector vec = maximal_vector(g, *candidate);
    bool better = false;
    if (best == nullptr || value > best_value) {
      better = true;
    } else if (value == best_value) {
      if (candidate->size() != best->size()) {
        better = candidate->size() < best->size();
      } else {
        better = vec < best_vector;
      }
    }
    if (better) {
      best = candidate;
      best_value = value;
      best_layers = std::move(layers);
      best_vector = std::move(vec);
    }
  }
  return DensestResult{*best, best_value, std::move(best_layers), beta};
}

}  // namespace

DensestResult densest_subgraph(const MultilayerGraph& g, double beta, DensestMode mode) {
  if (beta <= 0.0) throw std::invalid_argument("beta must be positive");

  std::vector<const VertexSet*> candidates;
  CoreDecomposition decomposition;
  InnermostSet innermost;
  if (mode == DensestMode::full_decomposition) {
    decomposition = decompose_hybrid(g);
    for (const auto& [vec, core] : decomposition.cores()) candidates.push_back(&core.vertices);
  } else {
    innermost = innermost_cores(g);
    for (const auto& [vec, core] : innermost.cores) candidates.push_back(&core.vertices);
  }
  if (candidates.empty()) throw std::invalid_argument("no non-empty core");
  return pick_best(g, beta, candidates);
}

DensestResult densest_bruteforce(const MultilayerGraph& g, double beta,
                                 std::size_t max_vertices) {
  if (beta <= 0.0) throw std::invalid_argument("beta must be positive");
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("no non-empty core");
  if (n > max_vertices) {
    throw RefusalError("exhaustive densest search refused: " + std::to_string(n) +
                       " vertices exceed the cap of " + std::to_string(max_vertices));
  }

  DensestResult best;
  best.beta = beta;
  bool have_best = false;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<vertex_t> members;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask & (std::uint64_t{1} << v)) members.push_back(static_cast<vertex_t>(v));
    }
    VertexSet subset(std::move(members));
    auto [value, layers] = delta(g, subset, beta);
    bool better = !have_best || value > best.delta_value ||
                  (value == best.delta_value && subset.size() < best.vertices.size());
    if (better) {
      best.vertices = std::move(subset);
      best.delta_value = value;
      best.best_layers = std::move(layers);
      have_best = true;
    }
  }
  return best;
}

}  // namespace mlcore
