#include "mlcore/quasiclique.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mlcore/errors.hpp"

namespace mlcore {

namespace {

constexpr double kEps = 1e-9;

std::uint32_t ceil_tolerant(double x) {
  return static_cast<std::uint32_t>(std::ceil(x - kEps));
}

}  // namespace

void MiningParams::validate(std::size_t layer_count) const {
  if (gamma.size() != layer_count) {
    throw std::invalid_argument("gamma must provide one threshold per layer");
  }
  for (double gl : gamma) {
    if (!(gl > 0.0) || gl > 1.0) throw std::invalid_argument("gamma values must lie in (0,1]");
  }
  if (!(min_sup > 0.0) || min_sup > 1.0) {
    throw std::invalid_argument("min_sup must lie in (0,1]");
  }
  if (min_size < 2) throw std::invalid_argument("min_size must be at least 2");
}

std::size_t MiningParams::required_layers(std::size_t layer_count) const {
  return ceil_tolerant(min_sup * static_cast<double>(layer_count));
}

std::uint32_t MiningParams::degree_threshold(layer_t layer) const {
  return ceil_tolerant(gamma[layer] * static_cast<double>(min_size - 1));
}

bool is_quasi_clique(const MultilayerGraph& g, const VertexSet& S, layer_t layer, double gamma) {
  const double needed = gamma * static_cast<double>(S.size() - 1);
  for (vertex_t u : S) {
    if (static_cast<double>(degree(g, S, u, layer)) < needed - kEps) return false;
  }
  return true;
}

VertexSet prune_graph(const MultilayerGraph& g, const CoreDecomposition& d,
                      const MiningParams& params) {
  params.validate(g.layer_count());
  const std::size_t required = params.required_layers(g.layer_count());

  std::vector<std::uint32_t> thresholds(g.layer_count());
  for (layer_t l = 0; l < g.layer_count(); ++l) thresholds[l] = params.degree_threshold(l);

  std::vector<char> keep(g.vertex_count(), 0);
  for (const auto& [vec, core] : d.cores()) {
    std::size_t matching = 0;
    for (layer_t l = 0; l < g.layer_count(); ++l) matching += (vec[l] >= thresholds[l]);
    if (matching >= required) {
      for (vertex_t v : core.vertices) keep[v] = 1;
    }
  }

  std::vector<vertex_t> members;
  for (vertex_t v = 0; v < g.vertex_count(); ++v) {
    if (keep[v]) members.push_back(v);
  }
  return VertexSet(std::move(members));
}

namespace {

// Depth-first set-enumeration tree over the candidate list. A subtree rooted
// at (current, start) can only yield supersets of `current` drawn from the
// candidates at or after `start`, so a layer is viable for the subtree only
// if every current member keeps enough neighbors among current + remaining.
class Miner {
 public:
  Miner(const MultilayerGraph& g, const VertexSet& restrict_to, const MiningParams& params)
      : g_(g),
        params_(params),
        required_(params.required_layers(g.layer_count())),
        candidates_(restrict_to.members().begin(), restrict_to.members().end()),
        position_(g.vertex_count(), -1),
        in_current_(g.vertex_count(), 0) {
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      position_[candidates_[i]] = static_cast<std::ptrdiff_t>(i);
    }
  }

  QuasiCliqueSet run() {
    if (candidates_.size() >= params_.min_size) dfs(0);
    return finalize();
  }

 private:
  bool active(vertex_t v, std::size_t start) const {
    return in_current_[v] || position_[v] >= static_cast<std::ptrdiff_t>(start);
  }

  bool subtree_viable(std::size_t start) const {
    const double needed =
        static_cast<double>(std::max<std::size_t>(params_.min_size, current_.size()) - 1);
    std::size_t viable_layers = 0;
    for (layer_t l = 0; l < g_.layer_count(); ++l) {
      const double bound = params_.gamma[l] * needed - kEps;
      bool ok = true;
      for (vertex_t u : current_) {
        std::size_t d = 0;
        for (vertex_t v : g_.neighbors(u, l)) d += active(v, start);
        if (static_cast<double>(d) < bound) {
          ok = false;
          break;
        }
      }
      viable_layers += ok;
      if (viable_layers >= required_) return true;
    }
    return viable_layers >= required_;
  }

  void record_if_qualifying() {
    if (current_.size() < params_.min_size) return;
    const double size_minus_one = static_cast<double>(current_.size() - 1);
    std::vector<layer_t> supporting;
    for (layer_t l = 0; l < g_.layer_count(); ++l) {
      const double needed = params_.gamma[l] * size_minus_one - kEps;
      bool ok = true;
      for (vertex_t u : current_) {
        std::size_t d = 0;
        for (vertex_t v : g_.neighbors(u, l)) d += in_current_[v];
        if (static_cast<double>(d) < needed) {
          ok = false;
          break;
        }
      }
      if (ok) supporting.push_back(l);
    }
    if (supporting.size() >= required_) {
      qualifying_.push_back(
          QuasiClique{VertexSet(std::vector<vertex_t>(current_)), std::move(supporting)});
    }
  }

  void dfs(std::size_t start) {
    if (current_.size() + (candidates_.size() - start) < params_.min_size) return;
    if (!current_.empty()) {
      if (!subtree_viable(start)) return;
      record_if_qualifying();
    }
    for (std::size_t i = start; i < candidates_.size(); ++i) {
      vertex_t v = candidates_[i];
      current_.push_back(v);
      in_current_[v] = 1;
      dfs(i + 1);
      in_current_[v] = 0;
      current_.pop_back();
    }
  }

  QuasiCliqueSet finalize() {
    // Maximality: drop qualifying sets contained in another qualifying set.
    std::stable_sort(qualifying_.begin(), qualifying_.end(),
                     [](const QuasiClique& a, const QuasiClique& b) {
                       return a.vertices.size() > b.vertices.size();
                     });
    QuasiCliqueSet out;
    for (QuasiClique& candidate : qualifying_) {
      bool contained = false;
      for (const QuasiClique& kept : out.subgraphs) {
        if (candidate.vertices.size() < kept.vertices.size() &&
            candidate.vertices.is_subset_of(kept.vertices)) {
          contained = true;
          break;
        }
      }
      if (!contained) out.subgraphs.push_back(std::move(candidate));
    }
    std::sort(out.subgraphs.begin(), out.subgraphs.end(),
              [](const QuasiClique& a, const QuasiClique& b) {
                if (a.vertices.size() != b.vertices.size())
                  return a.vertices.size() < b.vertices.size();
                return a.vertices < b.vertices;
              });
    return out;
  }

  const MultilayerGraph& g_;
  const MiningParams& params_;
  std::size_t required_;
  std::vector<vertex_t> candidates_;
  std::vector<std::ptrdiff_t> position_;
  std::vector<char> in_current_;
  std::vector<vertex_t> current_;
  std::vector<QuasiClique> qualifying_;
};

}  // namespace

QuasiCliqueSet mine_fcgqc(const MultilayerGraph& g, const VertexSet& restrict_to,
                          const MiningParams& params) {
  params.validate(g.layer_count());
  if (restrict_to.size() > params.enum_cap) {
    throw RefusalError("quasi-clique enumeration refused: " +
                       std::to_string(restrict_to.size()) + " candidates exceed the cap of " +
                       std::to_string(params.enum_cap));
  }
  return Miner(g, restrict_to, params).run();
}

PrunedMiningResult mine_fcgqc_pruned(const MultilayerGraph& g, const MiningParams& params) {
  params.validate(g.layer_count());
  CoreDecomposition d = decompose_hybrid(g);
  VertexSet pruned = prune_graph(g, d, params);
  PrunedMiningResult result;
  result.pruned_vertex_count = pruned.size();
  result.cliques = mine_fcgqc(g, pruned, params);
  return result;
}

}  // namespace mlcore
