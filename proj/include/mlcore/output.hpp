#pragma once

#include <iosfwd>

#include "json.hpp"
#include "mlcore/community.hpp"
#include "mlcore/decomposition.hpp"
#include "mlcore/densest.hpp"
#include "mlcore/graph.hpp"
#include "mlcore/innermost.hpp"
#include "mlcore/quasiclique.hpp"
#include "mlcore/stats.hpp"

namespace mlcore {

struct OutputOptions {
  bool include_vertices = true;
};

// JSON Lines: one record per distinct core ordered by vector, then a final
// stats record.
void write_decomposition_jsonl(std::ostream& out, const MultilayerGraph& g,
                               const CoreDecomposition& d, const OutputOptions& options = {});

// Same record shape with "innermost": true per core; no stats record.
void write_innermost_jsonl(std::ostream& out, const MultilayerGraph& g, const InnermostSet& s,
                           const OutputOptions& options = {});

nlohmann::ordered_json densest_to_json(const MultilayerGraph& g, const DensestResult& result);
nlohmann::ordered_json community_to_json(const MultilayerGraph& g, const CommunityResult& result);
nlohmann::ordered_json quasicliques_to_json(const MultilayerGraph& g, const QuasiCliqueSet& s);
nlohmann::ordered_json level_stats_to_json(const LevelStats& stats);

// Vertex labels of the set, sorted lexicographically.
std::vector<std::string> sorted_labels(const MultilayerGraph& g, const VertexSet& s);

}  // namespace mlcore
