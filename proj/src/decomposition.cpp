#include "mlcore/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace mlcore {

namespace {
using SetPtr = std::shared_ptr<const VertexSet>;
}  // namespace

class DecompositionBuilder {
 public:
  explicit DecompositionBuilder(const MultilayerGraph& g) : g_(g) {}

  // Distinctness is on the vertex set; the key is the maximal coreness vector,
  // computed once when a set is first seen.
  void add(const VertexSet& core) {
    if (core.empty()) return;
    if (!seen_.insert(core).second) return;
    CorenessVector vec = maximal_vector(g_, core);
    Core entry{core, vec};
    cores_.emplace(std::move(vec), std::move(entry));
  }

  CoreDecomposition finish(TraversalStats stats) && {
    stats.output_cores = cores_.size();
    CoreDecomposition d;
    d.cores_ = std::move(cores_);
    d.stats_ = stats;
    d.layer_count_ = g_.layer_count();
    return d;
  }

 private:
  const MultilayerGraph& g_;
  std::unordered_set<VertexSet, VertexSetHash> seen_;
  std::map<CorenessVector, Core> cores_;
};

namespace {

std::function<bool(const VertexSet&)> make_admit(const EngineHooks* hooks) {
  if (hooks != nullptr && hooks->admit) {
    auto admit = hooks->admit;
    return [admit](const VertexSet& s) { return !s.empty() && admit(s); };
  }
  return [](const VertexSet& s) { return !s.empty(); };
}

void fire(const EngineHooks* hooks, const NodeEvent& event) {
  if (hooks != nullptr && hooks->on_node) hooks->on_node(event);
}

VertexSet intersect_all(const MultilayerGraph& g, std::span<const SetPtr> sets) {
  if (sets.empty()) return g.all_vertices();
  VertexSet acc = *sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) acc = VertexSet::intersect(acc, *sets[i]);
  return acc;
}

// Iterates the lattice rectangle [lo, hi] componentwise, calling fn on each vector.
template <typename Fn>
void for_each_between(const CorenessVector& lo, const CorenessVector& hi, Fn&& fn) {
  CorenessVector k = lo;
  const std::size_t dims = lo.size();
  while (true) {
    fn(k);
    std::size_t i = 0;
    for (; i < dims; ++i) {
      if (k[i] < hi[i]) {
        k.set(i, k[i] + 1);
        break;
      }
      k.set(i, lo[i]);
    }
    if (i == dims) break;
  }
}

std::vector<layer_t> dfs_layer_order(const MultilayerGraph& g, const DfsOptions& options) {
  std::vector<layer_t> order(g.layer_count());
  std::iota(order.begin(), order.end(), layer_t{0});
  if (options.order == LayerOrder::random) {
    std::mt19937_64 rng(options.seed);
    std::shuffle(order.begin(), order.end(), rng);
  } else {
    std::stable_sort(order.begin(), order.end(), [&g](layer_t a, layer_t b) {
      return g.layer_edge_count(a) < g.layer_edge_count(b);
    });
  }
  return order;
}

}  // namespace

const Core* CoreDecomposition::lookup(const CorenessVector& k) const {
  if (k.size() != layer_count_) {
    throw std::invalid_argument("lookup vector dimension does not match layer count");
  }
  // The core of k is the superset of every stored core whose maximal vector
  // dominates k, so the largest dominating entry is the answer.
  const Core* best = nullptr;
  for (const auto& [vec, core] : cores_) {
    if (vec.dominates(k)) {
      if (best == nullptr || core.vertices.size() > best->vertices.size()) best = &core;
    }
  }
  return best;
}

CoreDecomposition decompose_naive(const MultilayerGraph& g) {
  DecompositionBuilder builder(g);
  TraversalStats stats;

  const VertexSet all = g.all_vertices();
  std::vector<std::uint32_t> orders = single_layer_max_orders(g);

  CorenessVector hi(orders);
  for_each_between(CorenessVector::zeros(g.layer_count()), hi, [&](const CorenessVector& k) {
    ++stats.cores_visited;
    VertexSet core = peel_core(g, all, k);
    if (!core.empty()) {
      ++stats.cores_computed;
      builder.add(core);
    }
  });
  return std::move(builder).finish(stats);
}

CoreDecomposition decompose_bfs(const MultilayerGraph& g, const EngineHooks* hooks) {
  DecompositionBuilder builder(g);
  TraversalStats stats;
  auto admit = make_admit(hooks);

  const VertexSet all = g.all_vertices();
  std::unordered_map<CorenessVector, std::vector<SetPtr>, CorenessVectorHash> fathers;
  std::unordered_set<CorenessVector, CorenessVectorHash> enqueued;
  std::deque<CorenessVector> queue;

  const CorenessVector root = CorenessVector::zeros(g.layer_count());
  queue.push_back(root);
  enqueued.insert(root);

  while (!queue.empty()) {
    CorenessVector k = std::move(queue.front());
    queue.pop_front();
    ++stats.cores_visited;

    std::vector<SetPtr> father_sets;
    if (auto it = fathers.find(k); it != fathers.end()) {
      father_sets = std::move(it->second);
      fathers.erase(it);
    }

    NodeEvent event{k, father_sets.size(), false, false, nullptr, father_sets};
    if (father_sets.size() == k.nonzero_count()) {
      VertexSet base = intersect_all(g, father_sets);
      VertexSet core = peel_core(g, base, k);
      event.peeled = true;
      event.result = &core;
      if (admit(core)) {
        event.kept = true;
        ++stats.cores_computed;
        builder.add(core);
        SetPtr shared = std::make_shared<const VertexSet>(std::move(core));
        event.result = shared.get();
        for (layer_t l = 0; l < g.layer_count(); ++l) {
          CorenessVector child = k.bumped(l);
          fathers[child].push_back(shared);
          if (enqueued.insert(child).second) queue.push_back(child);
        }
      }
      fire(hooks, event);
    } else {
      fire(hooks, event);
    }
  }
  return std::move(builder).finish(stats);
}

CoreDecomposition decompose_dfs(const MultilayerGraph& g, const DfsOptions& options,
                                const EngineHooks* hooks) {
  DecompositionBuilder builder(g);
  TraversalStats stats;
  auto admit = make_admit(hooks);

  const VertexSet all = g.all_vertices();
  if (!admit(all)) return std::move(builder).finish(stats);

  ++stats.cores_visited;
  ++stats.cores_computed;
  builder.add(all);

  const std::size_t layers = g.layer_count();
  std::vector<layer_t> removal = dfs_layer_order(g, options);
  std::vector<char> in_r(layers, 1);

  std::map<CorenessVector, SetPtr> queue;
  queue.emplace(CorenessVector::zeros(layers), std::make_shared<const VertexSet>(all));

  for (layer_t removed : removal) {
    in_r[removed] = 0;
    std::map<CorenessVector, SetPtr> next;
    for (const auto& [k, set] : queue) {
      for (layer_t l = 0; l < layers; ++l) {
        if (k[l] != 0) continue;
        auto path = cores_path(g, *set, k, l, &admit);
        for (auto& entry : path) {
          ++stats.cores_visited;
          ++stats.cores_computed;
          builder.add(entry.core);
          if (in_r[l]) {
            next.emplace(entry.vector,
                         std::make_shared<const VertexSet>(std::move(entry.core)));
          }
        }
      }
    }
    queue = std::move(next);
  }
  return std::move(builder).finish(stats);
}

CoreDecomposition decompose_hybrid(const MultilayerGraph& g, const EngineHooks* hooks) {
  DecompositionBuilder builder(g);
  TraversalStats stats;
  auto admit = make_admit(hooks);

  const VertexSet all = g.all_vertices();
  const CorenessVector root = CorenessVector::zeros(g.layer_count());

  // Seed with one single-layer decomposition per layer; their cores double as
  // early fathers for intersections.
  std::unordered_map<CorenessVector, SetPtr, CorenessVectorHash> known;
  for (layer_t l = 0; l < g.layer_count(); ++l) {
    auto path = cores_path(g, all, root, l, &admit);
    for (auto& entry : path) {
      ++stats.cores_computed;
      builder.add(entry.core);
      known.emplace(entry.vector, std::make_shared<const VertexSet>(std::move(entry.core)));
    }
  }

  std::unordered_map<CorenessVector, std::vector<SetPtr>, CorenessVectorHash> fathers;
  std::unordered_set<CorenessVector, CorenessVectorHash> enqueued;
  std::deque<CorenessVector> queue;
  queue.push_back(root);
  enqueued.insert(root);

  while (!queue.empty()) {
    CorenessVector k = std::move(queue.front());
    queue.pop_front();
    ++stats.cores_visited;

    std::vector<SetPtr> father_sets;
    if (auto it = fathers.find(k); it != fathers.end()) {
      father_sets = std::move(it->second);
      fathers.erase(it);
    }

    NodeEvent event{k, father_sets.size(), false, false, nullptr, father_sets};
    VertexSet rejected;  // keeps a non-admitted peel result alive for the event
    auto known_it = known.find(k);
    if (known_it == known.end() && father_sets.size() == k.nonzero_count()) {
      VertexSet base = intersect_all(g, father_sets);
      VertexSet core = peel_core(g, base, k);
      event.peeled = true;
      if (admit(core)) {
        event.kept = true;
        ++stats.cores_computed;
        builder.add(core);
        SetPtr shared = std::make_shared<const VertexSet>(std::move(core));
        event.result = shared.get();
        // Look-ahead: every vector between k and the min-degree vector of the
        // core denotes this same core.
        CorenessVector reach = maximal_vector(g, *shared);
        for_each_between(k, reach,
                         [&](const CorenessVector& mark) { known.emplace(mark, shared); });
        known_it = known.find(k);
      } else {
        rejected = std::move(core);
        event.result = &rejected;
      }
    } else if (known_it != known.end()) {
      event.kept = true;
      event.result = known_it->second.get();
    }

    if (known_it != known.end()) {
      const SetPtr& core = known_it->second;
      for (layer_t l = 0; l < g.layer_count(); ++l) {
        CorenessVector child = k.bumped(l);
        fathers[child].push_back(core);
        if (enqueued.insert(child).second) queue.push_back(child);
      }
    }
    fire(hooks, event);
  }
  return std::move(builder).finish(stats);
}

}  // namespace mlcore
