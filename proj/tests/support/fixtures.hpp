#pragma once

#include <random>
#include <string>
#include <vector>

#include "mlcore/graph.hpp"
#include "mlcore/types.hpp"

namespace mlcore::testing {

// The 6-vertex, 2-layer worked example: layer 0 has 9 edges, layer 1 has 8.
// Distinct cores: (1,1)=ABCDEF, (2,1)=ABDEF, (3,1)=ABDE, (1,3)=BCEF, (2,2)=BEF.
inline MultilayerGraph example_graph() {
  GraphBuilder b;
  for (const char* e : {"A B", "A D", "A E", "B C", "B D", "B E", "B F", "D E", "E F"}) {
    std::string s(e);
    b.add_edge(s.substr(0, 1), s.substr(2, 1), 0);
  }
  for (const char* e : {"A B", "B C", "B D", "B E", "B F", "C E", "C F", "E F"}) {
    std::string s(e);
    b.add_edge(s.substr(0, 1), s.substr(2, 1), 1);
  }
  return b.build();
}

inline VertexSet by_labels(const MultilayerGraph& g, const std::vector<std::string>& labels) {
  std::vector<vertex_t> members;
  for (const auto& label : labels) members.push_back(*g.find_vertex(label));
  return VertexSet(std::move(members));
}

// G(n, p) independently per layer, deterministic in the seed.
inline MultilayerGraph random_graph(std::size_t n, std::size_t layers, double p,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(p);
  GraphBuilder b;
  b.ensure_vertices(n);
  for (layer_t l = 0; l < layers; ++l) {
    b.ensure_layer(l);
    for (vertex_t u = 0; u < n; ++u) {
      for (vertex_t v = u + 1; v < n; ++v) {
        if (edge(rng)) b.add_edge(u, v, l);
      }
    }
  }
  return b.build();
}

}  // namespace mlcore::testing
