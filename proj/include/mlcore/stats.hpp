#pragma once

#include <cstddef>
#include <vector>

#include "mlcore/decomposition.hpp"
#include "mlcore/graph.hpp"

namespace mlcore {

struct LevelEntry {
  std::size_t core_count = 0;
  double mean_size = 0.0;
  double mean_density = 0.0;  // sum over layers of |E_l[C]| divided by |C|, averaged
};

struct LevelStats {
  std::vector<LevelEntry> levels;  // index = lattice level (component sum)
  std::size_t total_nonempty_vectors = 0;
};

// Per-level aggregates over all non-empty lattice vectors (not only the
// distinct maximal ones), reconstructed from the decomposition via lookup over
// the grid bounded by the per-layer maxima of the stored vectors.
LevelStats level_stats(const MultilayerGraph& g, const CoreDecomposition& d);

}  // namespace mlcore
