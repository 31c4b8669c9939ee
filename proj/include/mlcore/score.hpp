#pragma once

#include <span>
#include <vector>

#include "mlcore/types.hpp"

namespace mlcore {

struct SubsetScore {
  double value = 0.0;
  std::vector<layer_t> layers;  // an attaining subset, ascending layer indices
};

// max over non-empty layer subsets of (min value in subset) * |subset|^beta.
// The optimum over size-j subsets is the top-j prefix of the values sorted
// non-increasingly, since the min over any size-j subset is at most the j-th
// largest value. Comparisons run in log space so huge beta cannot overflow
// them; ties keep the smaller prefix.
SubsetScore max_prefix_score(std::span<const double> per_layer_values, double beta);

}  // namespace mlcore
