#include "mlcore/stats.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "mlcore/densest.hpp"

namespace mlcore {

namespace {

// Iterates the grid [0, hi] componentwise.
template <typename Fn>
void for_each_vector(const CorenessVector& hi, Fn&& fn) {
  CorenessVector k = CorenessVector::zeros(hi.size());
  while (true) {
    fn(k);
    std::size_t i = 0;
    for (; i < hi.size(); ++i) {
      if (k[i] < hi[i]) {
        k.set(i, k[i] + 1);
        break;
      }
      k.set(i, 0);
    }
    if (i == hi.size()) break;
  }
}

}  // namespace

LevelStats level_stats(const MultilayerGraph& g, const CoreDecomposition& d) {
  LevelStats stats;
  if (d.cores().empty()) return stats;

  // The per-layer maxima of the stored maximal vectors equal the single-layer
  // core maxima, so they bound every non-empty vector.
  std::vector<std::uint32_t> hi(d.layer_count(), 0);
  for (const auto& [vec, core] : d.cores()) {
    for (std::size_t l = 0; l < hi.size(); ++l) hi[l] = std::max(hi[l], vec[l]);
  }

  std::unordered_map<const Core*, double> density_cache;
  auto density_of = [&](const Core* core) {
    auto it = density_cache.find(core);
    if (it != density_cache.end()) return it->second;
    std::vector<double> per_layer = induced_densities(g, core->vertices);
    double sum = std::accumulate(per_layer.begin(), per_layer.end(), 0.0);
    density_cache.emplace(core, sum);
    return sum;
  };

  std::vector<double> size_sums;
  std::vector<double> density_sums;
  for_each_vector(CorenessVector(hi), [&](const CorenessVector& k) {
    const Core* core = d.lookup(k);
    if (core == nullptr) return;
    std::size_t level = static_cast<std::size_t>(k.level());
    if (stats.levels.size() <= level) {
      stats.levels.resize(level + 1);
      size_sums.resize(level + 1, 0.0);
      density_sums.resize(level + 1, 0.0);
    }
    ++stats.levels[level].core_count;
    size_sums[level] += static_cast<double>(core->vertices.size());
    density_sums[level] += density_of(core);
    ++stats.total_nonempty_vectors;
  });

  for (std::size_t i = 0; i < stats.levels.size(); ++i) {
    if (stats.levels[i].core_count > 0) {
      stats.levels[i].mean_size = size_sums[i] / static_cast<double>(stats.levels[i].core_count);
      stats.levels[i].mean_density =
          density_sums[i] / static_cast<double>(stats.levels[i].core_count);
    }
  }
  return stats;
}

}  // namespace mlcore
