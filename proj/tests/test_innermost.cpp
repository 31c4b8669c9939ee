#include <map>

#include "doctest.h"
#include "mlcore/decomposition.hpp"
#include "mlcore/innermost.hpp"
#include "support/fixtures.hpp"

using namespace mlcore;
using namespace mlcore::testing;

namespace {

std::map<CorenessVector, VertexSet> as_map(const InnermostSet& s) {
  std::map<CorenessVector, VertexSet> m;
  for (const auto& [vec, core] : s.cores) m.emplace(vec, core.vertices);
  return m;
}

}  // namespace

TEST_CASE("inner-most cores of the worked example") {
  MultilayerGraph g = example_graph();
  InnermostSet s = innermost_cores(g);
  REQUIRE(s.size() == 3);
  CHECK(s.cores.at(CorenessVector{3, 1}).vertices == by_labels(g, {"A", "B", "D", "E"}));
  CHECK(s.cores.at(CorenessVector{1, 3}).vertices == by_labels(g, {"B", "C", "E", "F"}));
  CHECK(s.cores.at(CorenessVector{2, 2}).vertices == by_labels(g, {"B", "E", "F"}));
}

TEST_CASE("edgeless graph has the root as its only inner-most core") {
  GraphBuilder b;
  b.ensure_vertices(4);
  b.ensure_layer(1);
  MultilayerGraph g = b.build();
  InnermostSet s = innermost_cores(g);
  REQUIRE(s.size() == 1);
  CHECK(s.cores.begin()->first == CorenessVector::zeros(2));
  CHECK(s.cores.begin()->second.vertices == g.all_vertices());
}

TEST_CASE("direct extraction equals a-posteriori filtering") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    MultilayerGraph g =
        random_graph(10 + seed % 9, 2 + seed % 3, 0.12 + 0.02 * (seed % 4), 5000 + seed);
    CHECK(as_map(innermost_cores(g)) == as_map(filter_innermost(decompose_naive(g))));
  }
}

TEST_CASE("filter_innermost keeps a lone core") {
  GraphBuilder b;
  b.add_edge("x", "y", 0);
  MultilayerGraph g = b.build();
  CoreDecomposition d = decompose_naive(g);
  InnermostSet s = filter_innermost(d);
  REQUIRE(s.size() == 1);
  CHECK(s.cores.begin()->first == CorenessVector{1});
}

TEST_CASE("output vectors are pairwise non-dominated") {
  for (std::uint64_t seed : {60u, 61u, 62u}) {
    MultilayerGraph g = random_graph(16, 3, 0.22, seed);
    InnermostSet s = innermost_cores(g);
    for (const auto& [a, core_a] : s.cores) {
      for (const auto& [b, core_b] : s.cores) {
        if (a != b) CHECK(!a.dominates(b));
      }
    }
  }
}

TEST_CASE("every inner-most vector is a lattice leaf") {
  for (std::uint64_t seed : {70u, 71u}) {
    MultilayerGraph g = random_graph(14, 2, 0.3, seed);
    InnermostSet s = innermost_cores(g);
    for (const auto& [vec, core] : s.cores) {
      for (std::size_t l = 0; l < vec.size(); ++l) {
        CHECK(peel_core(g, g.all_vertices(), vec.bumped(l)).empty());
      }
    }
  }
}

TEST_CASE("threshold trie lookups default to zero and stores accumulate maxima") {
  ThresholdTrie trie(2);
  std::vector<std::uint32_t> path{1, 0};
  CHECK(trie.lookup(path) == 0);
  trie.store(path, 5);
  CHECK(trie.lookup(path) == 5);
  trie.store(path, 3);  // never decreases
  CHECK(trie.lookup(path) == 5);
  trie.store(path, 8);
  CHECK(trie.lookup(path) == 8);
}

// Replays the threshold bookkeeping of the worked 3-layer run: the recorded
// values force the floors 5, 5, 5, and finally 8 for the all-zero prefix.
TEST_CASE("threshold trie replays the recorded 3-layer run") {
  ThresholdTrie trie(2);
  auto store = [&trie](std::uint32_t a, std::uint32_t b, std::uint32_t value) {
    std::vector<std::uint32_t> path{a, b};
    trie.store(path, value);
  };

  store(2, 0, 4);  // found (2,0,3)
  CHECK(last_layer_floor(trie, CorenessVector{1, 1, 0}) == 0);

  store(1, 2, 5);  // found (1,2,4)
  CHECK(last_layer_floor(trie, CorenessVector{1, 1, 0}) == 5);
  store(1, 1, 5);  // floor 5 failed at prefix (1,1)
  CHECK(last_layer_floor(trie, CorenessVector{1, 0, 0}) == 5);
  store(1, 0, 8);  // found (1,0,7)

  store(0, 3, 2);  // found (0,3,1)
  CHECK(last_layer_floor(trie, CorenessVector{0, 2, 0}) == 5);
  store(0, 2, 5);  // floor 5 failed at prefix (0,2)
  CHECK(last_layer_floor(trie, CorenessVector{0, 1, 0}) == 5);
  store(0, 1, 6);  // found (0,1,5)

  CHECK(last_layer_floor(trie, CorenessVector{0, 0, 0}) == 8);
}

TEST_CASE("innermost_core_in_layer climbs to the highest component") {
  MultilayerGraph g = example_graph();

  auto reached = innermost_core_in_layer(g, by_labels(g, {"B", "C", "E", "F"}), {1, 0}, 1);
  REQUIRE(reached.has_value());
  CHECK(reached->vertices == by_labels(g, {"B", "C", "E", "F"}));
  CHECK(reached->vector == CorenessVector{1, 3});

  CHECK(!innermost_core_in_layer(g, g.all_vertices(), {0, 4}, 0).has_value());

  GraphBuilder b;
  b.add_edge("x", "y", 0);
  b.add_edge("y", "z", 0);
  b.add_edge("x", "z", 0);
  MultilayerGraph triangle = b.build();
  auto whole = innermost_core_in_layer(triangle, triangle.all_vertices(), {0}, 0);
  REQUIRE(whole.has_value());
  CHECK(whole->vector == CorenessVector{2});
  CHECK(whole->vertices == triangle.all_vertices());
}

TEST_CASE("single layer degenerates to one in-layer climb") {
  MultilayerGraph g = random_graph(15, 1, 0.25, 7);
  InnermostSet s = innermost_cores(g);
  auto direct = innermost_core_in_layer(g, g.all_vertices(), CorenessVector::zeros(1), 0);
  REQUIRE(direct.has_value());
  REQUIRE(s.size() == 1);
  CHECK(s.cores.begin()->second.vertices == direct->vertices);
  CHECK(s.cores.begin()->first == direct->vector);
}
