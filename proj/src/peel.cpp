#include "mlcore/peel.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace mlcore {

namespace {

void check_vector(const MultilayerGraph& g, const CorenessVector& k) {
  if (k.size() != g.layer_count()) {
    throw std::invalid_argument("coreness vector dimension does not match layer count");
  }
}

}  // namespace

CorenessVector maximal_vector(const MultilayerGraph& g, const VertexSet& C) {
  if (C.empty()) throw std::invalid_argument("maximal vector of an empty set is undefined");
  std::vector<char> in_set(g.vertex_count(), 0);
  for (vertex_t v : C) in_set[v] = 1;

  std::vector<std::uint32_t> mins(g.layer_count(), 0);
  for (layer_t l = 0; l < g.layer_count(); ++l) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (vertex_t u : C) {
      std::size_t d = 0;
      for (vertex_t v : g.neighbors(u, l)) d += in_set[v];
      best = std::min(best, d);
    }
    mins[l] = static_cast<std::uint32_t>(best);
  }
  return CorenessVector(std::move(mins));
}

VertexSet peel_core(const MultilayerGraph& g, const VertexSet& S, const CorenessVector& k) {
  check_vector(g, k);
  if (S.empty()) return {};

  std::vector<layer_t> constrained;
  for (layer_t l = 0; l < g.layer_count(); ++l) {
    if (k[l] > 0) constrained.push_back(l);
  }
  if (constrained.empty()) return S;

  const std::size_t n = g.vertex_count();
  std::vector<char> alive(n, 0);
  for (vertex_t v : S) alive[v] = 1;

  std::vector<std::vector<std::uint32_t>> deg(g.layer_count());
  for (layer_t l : constrained) {
    deg[l].assign(n, 0);
    for (vertex_t u : S) {
      std::uint32_t d = 0;
      for (vertex_t v : g.neighbors(u, l)) d += alive[v];
      deg[l][u] = d;
    }
  }

  std::vector<vertex_t> worklist;
  for (vertex_t u : S) {
    for (layer_t l : constrained) {
      if (deg[l][u] < k[l]) {
        worklist.push_back(u);
        break;
      }
    }
  }

  while (!worklist.empty()) {
    vertex_t u = worklist.back();
    worklist.pop_back();
    if (!alive[u]) continue;
    alive[u] = 0;
    for (layer_t l : constrained) {
      for (vertex_t v : g.neighbors(u, l)) {
        if (alive[v] && deg[l][v]-- == k[l]) worklist.push_back(v);
      }
    }
  }

  std::vector<vertex_t> survivors;
  for (vertex_t v : S) {
    if (alive[v]) survivors.push_back(v);
  }
  return VertexSet(std::move(survivors));
}

std::vector<PathEntry> cores_path(const MultilayerGraph& g, const VertexSet& S,
                                  const CorenessVector& k, layer_t along,
                                  const std::function<bool(const VertexSet&)>* keep) {
  check_vector(g, k);
  if (along >= g.layer_count()) throw std::invalid_argument("path layer out of range");

  std::vector<PathEntry> out;
  if (S.empty()) return out;

  const std::size_t n = g.vertex_count();
  std::vector<char> alive(n, 0);
  for (vertex_t v : S) alive[v] = 1;

  std::vector<layer_t> cascade;
  for (layer_t l = 0; l < g.layer_count(); ++l) {
    if (l != along && k[l] > 0) cascade.push_back(l);
  }

  std::vector<std::vector<std::uint32_t>> deg(g.layer_count());
  std::uint32_t max_deg = 0;
  {
    deg[along].assign(n, 0);
    for (layer_t l : cascade) deg[l].assign(n, 0);
    for (vertex_t u : S) {
      std::uint32_t d = 0;
      for (vertex_t v : g.neighbors(u, along)) d += alive[v];
      deg[along][u] = d;
      max_deg = std::max(max_deg, d);
      for (layer_t l : cascade) {
        std::uint32_t dl = 0;
        for (vertex_t v : g.neighbors(u, l)) dl += alive[v];
        deg[l][u] = dl;
      }
    }
  }

  // Buckets on the `along` degree, with lazy entries: a vertex is re-pushed at
  // its new degree on every decrement, and stale entries are skipped on pop.
  std::vector<std::vector<vertex_t>> buckets(max_deg + 1);
  for (vertex_t u : S) buckets[deg[along][u]].push_back(u);

  std::size_t alive_count = S.size();
  std::vector<vertex_t> worklist;

  // Callers pass a set already satisfying k, but enforcing the base vector
  // here costs nothing and folds into the first raised step.
  for (vertex_t u : S) {
    for (layer_t l : cascade) {
      if (deg[l][u] < k[l]) {
        worklist.push_back(u);
        break;
      }
    }
  }

  std::uint32_t threshold = k[along];
  auto remove_vertex = [&](vertex_t u) {
    alive[u] = 0;
    --alive_count;
    for (vertex_t v : g.neighbors(u, along)) {
      if (!alive[v]) continue;
      std::uint32_t d = --deg[along][v];
      buckets[d].push_back(v);
      if (d < threshold) worklist.push_back(v);
    }
    for (layer_t l : cascade) {
      for (vertex_t v : g.neighbors(u, l)) {
        if (alive[v] && deg[l][v]-- == k[l]) worklist.push_back(v);
      }
    }
  };

  auto drain_worklist = [&] {
    while (!worklist.empty()) {
      vertex_t u = worklist.back();
      worklist.pop_back();
      if (alive[u]) remove_vertex(u);
    }
  };

  CorenessVector current = k;
  for (threshold = k[along] + 1; alive_count > 0; ++threshold) {
    drain_worklist();
    for (std::uint32_t d = 0; d < threshold && d < buckets.size(); ++d) {
      while (!buckets[d].empty()) {
        vertex_t u = buckets[d].back();
        buckets[d].pop_back();
        if (!alive[u] || deg[along][u] != d) continue;
        remove_vertex(u);
        drain_worklist();
      }
    }
    if (alive_count == 0) break;

    std::vector<vertex_t> survivors;
    survivors.reserve(alive_count);
    for (vertex_t v : S) {
      if (alive[v]) survivors.push_back(v);
    }
    current.set(along, threshold);
    VertexSet core(std::move(survivors));
    if (keep != nullptr && *keep && !(*keep)(core)) break;
    assert(out.empty() || core.is_subset_of(out.back().core));
    out.push_back(PathEntry{current, std::move(core)});
  }
  return out;
}

std::vector<std::uint32_t> single_layer_max_orders(const MultilayerGraph& g) {
  std::vector<std::uint32_t> orders(g.layer_count(), 0);
  if (g.vertex_count() == 0) return orders;
  const VertexSet all = g.all_vertices();
  const CorenessVector zero = CorenessVector::zeros(g.layer_count());
  for (layer_t l = 0; l < g.layer_count(); ++l) {
    auto path = cores_path(g, all, zero, l);
    orders[l] = path.empty() ? 0 : path.back().vector[l];
  }
  return orders;
}

}  // namespace mlcore
