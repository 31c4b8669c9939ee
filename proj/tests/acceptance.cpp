// Acceptance suite: one pass/fail line per criterion, exit 1 on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "mlcore/community.hpp"
#include "mlcore/decomposition.hpp"
#include "mlcore/densest.hpp"
#include "mlcore/innermost.hpp"
#include "mlcore/quasiclique.hpp"
#include "mlcore/score.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace mlcore;
using namespace mlcore::testing;
using clock_type = std::chrono::steady_clock;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& message) {
    if (!condition && ok) {
      ok = false;
      detail = message;
    }
  }
  void note(const std::string& message) {
    if (ok) detail = message;
  }
};

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

std::map<CorenessVector, VertexSet> as_map(const CoreDecomposition& d) {
  std::map<CorenessVector, VertexSet> m;
  for (const auto& [vec, core] : d.cores()) m.emplace(vec, core.vertices);
  return m;
}

std::map<CorenessVector, VertexSet> as_map(const InnermostSet& s) {
  std::map<CorenessVector, VertexSet> m;
  for (const auto& [vec, core] : s.cores) m.emplace(vec, core.vertices);
  return m;
}

// Shared instance pool for criteria 2, 3, and 9: sizes and probabilities are
// sampled jointly so the naive grid stays small.
struct Instance {
  MultilayerGraph graph;
  std::size_t n;
  std::size_t layers;
};

std::vector<Instance> equivalence_instances() {
  std::vector<Instance> instances;
  std::mt19937_64 rng(20240901);
  for (int i = 0; i < 200; ++i) {
    std::size_t layers = 2 + i % 4;
    std::size_t max_n = layers == 2 ? 40 : layers == 3 ? 30 : layers == 4 ? 20 : 14;
    std::uniform_int_distribution<std::size_t> pick_n(10, max_n);
    std::uniform_real_distribution<double> pick_p(0.05, 0.3);
    std::size_t n = pick_n(rng);
    double p = pick_p(rng);
    instances.push_back(Instance{random_graph(n, layers, p, rng()), n, layers});
  }
  return instances;
}

// --- criterion 1 -----------------------------------------------------------

Check criterion1() {
  Check c;
  auto start = clock_type::now();
  MultilayerGraph g = example_graph();
  CoreDecomposition d = decompose_naive(g);

  c.require(d.size() == 5, "expected 5 distinct cores, got " + std::to_string(d.size()));
  if (!c.ok) return c;

  auto expect = [&](std::initializer_list<std::uint32_t> vec,
                    const std::vector<std::string>& labels) {
    CorenessVector key(vec);
    auto it = d.cores().find(key);
    c.require(it != d.cores().end(), "missing core vector");
    if (it != d.cores().end()) {
      c.require(it->second.vertices == by_labels(g, labels), "wrong vertex set for a core");
    }
  };
  expect({1, 1}, {"A", "B", "C", "D", "E", "F"});
  expect({2, 1}, {"A", "B", "D", "E", "F"});
  expect({3, 1}, {"A", "B", "D", "E"});
  expect({1, 3}, {"B", "C", "E", "F"});
  expect({2, 2}, {"B", "E", "F"});

  c.require(d.stats().cores_computed == 13,
            "expected 13 non-empty lattice vectors, got " +
                std::to_string(d.stats().cores_computed));

  double elapsed = seconds_since(start);
  c.require(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
  c.note("5 cores, 13 non-empty vectors, " + std::to_string(elapsed) + " s");
  return c;
}

// --- criteria 2, 3, 9 ------------------------------------------------------

Check criterion2(const std::vector<Instance>& instances,
                 std::vector<CoreDecomposition>& naive_out,
                 std::vector<TraversalStats>& bfs_stats,
                 std::vector<TraversalStats>& hybrid_stats) {
  Check c;
  auto start = clock_type::now();
  std::uint64_t seed = 1;
  for (const Instance& instance : instances) {
    CoreDecomposition naive = decompose_naive(instance.graph);
    CoreDecomposition bfs = decompose_bfs(instance.graph);
    CoreDecomposition dfs = decompose_dfs(instance.graph, DfsOptions{seed++});
    CoreDecomposition hybrid = decompose_hybrid(instance.graph);
    auto reference = as_map(naive);
    c.require(as_map(bfs) == reference, "bfs disagrees with naive");
    c.require(as_map(dfs) == reference, "dfs disagrees with naive");
    c.require(as_map(hybrid) == reference, "hybrid disagrees with naive");
    bfs_stats.push_back(bfs.stats());
    hybrid_stats.push_back(hybrid.stats());
    naive_out.push_back(std::move(naive));
    if (!c.ok) return c;
  }
  double elapsed = seconds_since(start);
  c.require(elapsed < 60.0, "took " + std::to_string(elapsed) + " s (limit 60)");
  c.note("200 instances, 4 engines, " + std::to_string(elapsed) + " s");
  return c;
}

Check criterion3(const std::vector<Instance>& instances,
                 const std::vector<CoreDecomposition>& naive) {
  Check c;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    c.require(as_map(innermost_cores(instances[i].graph)) == as_map(filter_innermost(naive[i])),
              "direct inner-most extraction disagrees with filtering");
    if (!c.ok) return c;
  }
  MultilayerGraph g = example_graph();
  InnermostSet s = innermost_cores(g);
  c.require(s.size() == 3, "example graph must have 3 inner-most cores");
  c.require(s.cores.count(CorenessVector{3, 1}) == 1 &&
                s.cores.count(CorenessVector{1, 3}) == 1 &&
                s.cores.count(CorenessVector{2, 2}) == 1,
            "wrong inner-most vectors on the example graph");
  c.note("200 instances + example graph");
  return c;
}

Check criterion9(const std::vector<Instance>& instances,
                 const std::vector<CoreDecomposition>& naive,
                 const std::vector<TraversalStats>& bfs_stats,
                 const std::vector<TraversalStats>& hybrid_stats) {
  Check c;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    c.require(hybrid_stats[i].cores_computed <= bfs_stats[i].cores_computed,
              "hybrid computed more cores than bfs");
    c.require(bfs_stats[i].cores_computed <= naive[i].stats().cores_visited,
              "bfs computed more cores than the naive enumeration");
    c.require(hybrid_stats[i].cores_computed <= naive[i].stats().cores_visited,
              "hybrid computed more cores than the naive enumeration");
    if (!c.ok) return c;
  }
  c.note("hybrid <= bfs <= naive grid on all 200 instances");
  return c;
}

// --- criterion 4 -----------------------------------------------------------

Check criterion4() {
  Check c;
  std::mt19937_64 rng(777);
  const std::vector<double> betas{0.25, 1.0, 2.0, 4.0};
  for (int i = 0; i < 100; ++i) {
    std::uniform_int_distribution<std::size_t> pick_n(6, 14);
    std::uniform_int_distribution<std::size_t> pick_layers(2, 4);
    std::uniform_real_distribution<double> pick_p(0.1, 0.35);
    std::size_t n = pick_n(rng);
    std::size_t layers = pick_layers(rng);
    MultilayerGraph g = random_graph(n, layers, pick_p(rng), rng());
    for (double beta : betas) {
      DensestResult optimum = densest_bruteforce(g, beta);
      double bound = optimum.delta_value /
                     (2.0 * std::pow(static_cast<double>(layers), beta));
      DensestResult full = densest_subgraph(g, beta, DensestMode::full_decomposition);
      DensestResult inner = densest_subgraph(g, beta, DensestMode::innermost_only);
      c.require(full.delta_value >= bound - 1e-9, "full-mode approximation bound violated");
      c.require(inner.delta_value >= bound - 1e-9,
                "innermost-mode approximation bound violated");
      if (!c.ok) return c;
    }
  }
  c.note("100 instances x 4 betas, both modes");
  return c;
}

// --- criterion 5 -----------------------------------------------------------

Check criterion5() {
  Check c;
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> density(0.0, 6.0);
  const std::vector<double> betas{0.25, 1.0, 2.0, 4.0};

  for (int i = 0; i < 1000 && c.ok; ++i) {
    std::size_t layers = 1 + rng() % 6;
    std::vector<double> continuous(layers);
    std::vector<std::uint32_t> integers(layers);
    std::vector<double> integer_profile(layers);
    for (std::size_t l = 0; l < layers; ++l) {
      continuous[l] = (rng() % 6 == 0) ? 0.0 : density(rng);
      integers[l] = rng() % 7;
      integer_profile[l] = static_cast<double>(integers[l]);
    }
    for (double beta : betas) {
      double scan = max_prefix_score(continuous, beta).value;
      double brute = brute_subset_score(continuous, beta);
      c.require(std::fabs(scan - brute) <= 1e-12 * std::max(1.0, std::fabs(brute)),
                "delta-style prefix scan disagrees with subset brute force");
      double sig = sigma(CorenessVector(integers), beta);
      double sig_brute = brute_subset_score(integer_profile, beta);
      c.require(std::fabs(sig - sig_brute) <= 1e-12 * std::max(1.0, std::fabs(sig_brute)),
                "sigma disagrees with subset brute force");
    }
  }

  // theta on real graphs against brute force over its min-degree profile.
  for (int i = 0; i < 200 && c.ok; ++i) {
    MultilayerGraph g = random_graph(8 + i % 5, 2 + i % 5, 0.3, 4242 + i);
    VertexSet all = g.all_vertices();
    std::vector<double> mins(g.layer_count());
    for (layer_t l = 0; l < g.layer_count(); ++l) {
      mins[l] = static_cast<double>(min_degree(g, all, l));
    }
    for (double beta : betas) {
      double value = theta(g, all, beta).first;
      double brute = brute_subset_score(mins, beta);
      c.require(std::fabs(value - brute) <= 1e-12 * std::max(1.0, std::fabs(brute)),
                "theta disagrees with subset brute force");
    }
  }
  c.note("1000 profiles x 4 betas for delta/sigma, 200 graphs for theta");
  return c;
}

// --- criterion 6 -----------------------------------------------------------

Check criterion6() {
  Check c;
  std::mt19937_64 rng(909);
  std::size_t strict_candidates = 0;
  std::size_t strict_pruned = 0;

  for (int i = 0; i < 100; ++i) {
    std::size_t n = (i % 10 == 9) ? 20 + i % 6 : 8 + i % 9;
    double p = (n >= 20) ? 0.08 : 0.1 + 0.05 * (i % 4);
    std::size_t layers = 2 + i % 3;
    MultilayerGraph g = random_graph(n, layers, p, rng());

    for (double gamma : {0.5, 0.8, 1.0}) {
      for (double min_sup : {0.5, 1.0}) {
        for (std::uint32_t min_size : {3u, 4u}) {
          MiningParams params;
          params.gamma.assign(layers, gamma);
          params.min_sup = min_sup;
          params.min_size = min_size;

          PrunedMiningResult pruned = mine_fcgqc_pruned(g, params);
          QuasiCliqueSet baseline = mine_fcgqc(g, g.all_vertices(), params);

          c.require(pruned.cliques.size() == baseline.size(),
                    "pruned and unpruned result counts differ");
          for (std::size_t k = 0; c.ok && k < baseline.size(); ++k) {
            c.require(pruned.cliques.subgraphs[k].vertices == baseline.subgraphs[k].vertices,
                      "pruned and unpruned results differ");
          }
          c.require(pruned.pruned_vertex_count <= g.vertex_count(), "|V'| exceeds |V|");
          if (!c.ok) return c;

          if (gamma == 1.0 && min_sup == 1.0 && min_size == 3) {
            ++strict_candidates;
            if (pruned.pruned_vertex_count < g.vertex_count()) ++strict_pruned;
          }
        }
      }
    }
  }
  c.require(2 * strict_pruned >= strict_candidates,
            "pruning strict on only " + std::to_string(strict_pruned) + "/" +
                std::to_string(strict_candidates) + " tight-parameter instances");
  c.note("100 instances x 12 parameter combinations; strict pruning on " +
         std::to_string(strict_pruned) + "/" + std::to_string(strict_candidates));
  return c;
}

// --- criterion 7 -----------------------------------------------------------

Check criterion7() {
  Check c;
  std::mt19937_64 rng(555);
  const std::vector<double> betas{0.25, 1.0, 2.0, 4.0};
  for (int i = 0; i < 100 && c.ok; ++i) {
    std::uniform_int_distribution<std::size_t> pick_n(6, 14);
    std::size_t n = pick_n(rng);
    MultilayerGraph g = random_graph(n, 2 + i % 3, 0.15 + 0.05 * (i % 4), rng());
    for (std::size_t query_size = 1; query_size <= 4 && c.ok; ++query_size) {
      std::vector<vertex_t> q;
      while (q.size() < query_size) {
        vertex_t v = static_cast<vertex_t>(rng() % n);
        if (std::find(q.begin(), q.end(), v) == q.end()) q.push_back(v);
      }
      CommunityQuery query;
      query.query_vertices = VertexSet(q);
      for (double beta : betas) {
        query.beta = beta;
        double optimum = community_bruteforce(g, query).score;
        for (SearchStrategy strategy :
             {SearchStrategy::bfs, SearchStrategy::dfs, SearchStrategy::hybrid}) {
          query.strategy = strategy;
          CommunityResult result = community_search(g, query);
          c.require(std::fabs(result.score - optimum) <= 1e-9,
                    "community search is not optimal");
          c.require(result.vertices.contains_all(query.query_vertices),
                    "result does not contain the query vertices");
        }
        if (!c.ok) break;
      }
    }
  }
  if (!c.ok) return c;

  MultilayerGraph g = example_graph();
  CommunityQuery query;
  query.beta = 1.0;
  query.query_vertices = by_labels(g, {"F"});
  c.require(std::fabs(community_search(g, query).score - 4.0) <= 1e-9,
            "query {F} must score 4");
  query.query_vertices = by_labels(g, {"C"});
  c.require(std::fabs(community_search(g, query).score - 3.0) <= 1e-9,
            "query {C} must score 3");
  c.note("100 instances x 4 query sizes x 4 betas x 3 strategies + example queries");
  return c;
}

// --- criterion 8 -----------------------------------------------------------

Check criterion8() {
  Check c;
  std::mt19937_64 rng(181818);
  std::size_t nesting_cases = 0;
  std::size_t fixpoint_cases = 0;
  std::size_t father_cases = 0;
  std::size_t intersection_cases = 0;
  std::size_t uniqueness_cases = 0;

  for (int i = 0; i < 60 && c.ok; ++i) {
    std::size_t layers = 2 + i % 3;
    MultilayerGraph g = random_graph(10 + i % 8, layers, 0.15 + 0.03 * (i % 5), rng());
    VertexSet all = g.all_vertices();

    // Fact 1 nesting and Corollary 3 fixpoint on random vector pairs.
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::uint32_t> low(layers), high(layers);
      for (std::size_t l = 0; l < layers; ++l) {
        low[l] = rng() % 3;
        high[l] = low[l] + rng() % 3;
      }
      VertexSet outer = peel_core(g, all, CorenessVector(low));
      VertexSet inner = peel_core(g, all, CorenessVector(high));
      c.require(inner.is_subset_of(outer), "nesting violated");
      ++nesting_cases;

      if (!outer.empty()) {
        CorenessVector vec = maximal_vector(g, outer);
        c.require(peel_core(g, all, vec) == outer, "maximal-vector fixpoint violated");
        c.require(maximal_vector(g, peel_core(g, all, vec)) == vec,
                  "maximal vector not idempotent");
        ++fixpoint_cases;
      }
    }

    // Corollaries 1 and 2 observed during the BFS traversal.
    EngineHooks hooks;
    hooks.on_node = [&](const NodeEvent& event) {
      if (event.peeled && event.kept) {
        if (event.fathers_seen != event.vector.nonzero_count()) {
          c.require(false, "father count differs from non-zero component count");
        }
        ++father_cases;
        for (const auto& father : event.fathers) {
          if (!event.result->is_subset_of(*father)) {
            c.require(false, "core not contained in a father");
          }
          ++intersection_cases;
        }
      }
    };
    CoreDecomposition d = decompose_bfs(g, &hooks);

    // Theorem 1: no two stored entries share a vertex set.
    std::unordered_set<VertexSet, VertexSetHash> seen;
    for (const auto& [vec, core] : d.cores()) {
      c.require(seen.insert(core.vertices).second, "duplicate vertex set stored");
      ++uniqueness_cases;
    }
  }

  c.require(nesting_cases >= 500, "too few nesting cases");
  c.require(fixpoint_cases >= 500, "too few fixpoint cases");
  c.require(father_cases >= 500, "too few father-count cases");
  c.require(intersection_cases >= 500, "too few intersection cases");
  c.require(uniqueness_cases >= 500, "too few uniqueness cases");
  std::ostringstream detail;
  detail << "cases: nesting " << nesting_cases << ", fixpoint " << fixpoint_cases
         << ", fathers " << father_cases << ", intersections " << intersection_cases
         << ", uniqueness " << uniqueness_cases;
  c.note(detail.str());
  return c;
}

}  // namespace

int main() {
  auto started = clock_type::now();
  std::vector<Instance> instances = equivalence_instances();
  std::vector<CoreDecomposition> naive;
  std::vector<TraversalStats> bfs_stats, hybrid_stats;

  struct Named {
    int id;
    std::string name;
    Check result;
  };
  std::vector<Named> results;
  results.push_back({1, "figure-1 golden decomposition", criterion1()});
  results.push_back(
      {2, "engine equivalence on 200 instances", criterion2(instances, naive, bfs_stats, hybrid_stats)});
  results.push_back({3, "inner-most equivalence", criterion3(instances, naive)});
  results.push_back({4, "densest approximation bound", criterion4()});
  results.push_back({5, "prefix-scan subset maximization oracles", criterion5()});
  results.push_back({6, "quasi-clique pruning equivalence", criterion6()});
  results.push_back({7, "community-search optimality", criterion7()});
  results.push_back({8, "structural invariants suite", criterion8()});
  results.push_back(
      {9, "traversal efficiency ordering", criterion9(instances, naive, bfs_stats, hybrid_stats)});

  std::sort(results.begin(), results.end(),
            [](const Named& a, const Named& b) { return a.id < b.id; });

  bool all_ok = true;
  for (const Named& r : results) {
    std::printf("[%s] criterion %d: %s%s%s\n", r.result.ok ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.result.detail.empty() ? "" : " — ",
                r.result.detail.c_str());
    all_ok = all_ok && r.result.ok;
  }
  std::printf("total: %.1f s\n", seconds_since(started));
  return all_ok ? 0 : 1;
}
