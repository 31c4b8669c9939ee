#include "mlcore/output.hpp"

#include <algorithm>
#include <ostream>

namespace mlcore {

using nlohmann::ordered_json;

std::vector<std::string> sorted_labels(const MultilayerGraph& g, const VertexSet& s) {
  std::vector<std::string> labels;
  labels.reserve(s.size());
  for (vertex_t v : s) labels.push_back(g.label(v));
  std::sort(labels.begin(), labels.end());
  return labels;
}

namespace {

ordered_json core_record(const MultilayerGraph& g, const Core& core,
                         const OutputOptions& options, bool innermost) {
  ordered_json record;
  record["vector"] = core.vector.components();
  record["size"] = core.vertices.size();
  if (innermost) record["innermost"] = true;
  if (options.include_vertices) record["vertices"] = sorted_labels(g, core.vertices);
  return record;
}

}  // namespace

void write_decomposition_jsonl(std::ostream& out, const MultilayerGraph& g,
                               const CoreDecomposition& d, const OutputOptions& options) {
  for (const auto& [vec, core] : d.cores()) {
    out << core_record(g, core, options, false).dump() << '\n';
  }
  ordered_json stats;
  stats["stats"]["cores_computed"] = d.stats().cores_computed;
  stats["stats"]["cores_visited"] = d.stats().cores_visited;
  stats["stats"]["output_cores"] = d.stats().output_cores;
  out << stats.dump() << '\n';
}

void write_innermost_jsonl(std::ostream& out, const MultilayerGraph& g, const InnermostSet& s,
                           const OutputOptions& options) {
  for (const auto& [vec, core] : s.cores) {
    out << core_record(g, core, options, true).dump() << '\n';
  }
}

ordered_json densest_to_json(const MultilayerGraph& g, const DensestResult& result) {
  ordered_json out;
  out["vertices"] = sorted_labels(g, result.vertices);
  out["delta"] = result.delta_value;
  out["beta"] = result.beta;
  out["layers"] = result.best_layers;
  out["layer_densities"] = induced_densities(g, result.vertices);
  return out;
}

ordered_json community_to_json(const MultilayerGraph& g, const CommunityResult& result) {
  ordered_json out;
  out["vertices"] = sorted_labels(g, result.vertices);
  out["score"] = result.score;
  out["vector"] = result.vector.components();
  out["layers"] = result.best_layers;
  return out;
}

ordered_json quasicliques_to_json(const MultilayerGraph& g, const QuasiCliqueSet& s) {
  ordered_json list = ordered_json::array();
  for (const QuasiClique& qc : s.subgraphs) {
    ordered_json record;
    record["vertices"] = sorted_labels(g, qc.vertices);
    record["layers"] = qc.layers;
    list.push_back(std::move(record));
  }
  ordered_json out;
  out["quasi_cliques"] = std::move(list);
  return out;
}

ordered_json level_stats_to_json(const LevelStats& stats) {
  ordered_json levels = ordered_json::array();
  for (std::size_t i = 0; i < stats.levels.size(); ++i) {
    ordered_json entry;
    entry["level"] = i;
    entry["cores"] = stats.levels[i].core_count;
    entry["mean_size"] = stats.levels[i].mean_size;
    entry["mean_density"] = stats.levels[i].mean_density;
    levels.push_back(std::move(entry));
  }
  ordered_json out;
  out["levels"] = std::move(levels);
  out["total_nonempty_vectors"] = stats.total_nonempty_vectors;
  return out;
}

}  // namespace mlcore
