#include "mlcore/score.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace mlcore {

SubsetScore max_prefix_score(std::span<const double> per_layer_values, double beta) {
  SubsetScore best;
  if (per_layer_values.empty()) return best;

  std::vector<layer_t> order(per_layer_values.size());
  std::iota(order.begin(), order.end(), layer_t{0});
  std::stable_sort(order.begin(), order.end(), [&](layer_t a, layer_t b) {
    return per_layer_values[a] > per_layer_values[b];
  });

  double best_log = -std::numeric_limits<double>::infinity();
  std::size_t best_prefix = 1;
  for (std::size_t j = 1; j <= order.size(); ++j) {
    double min_value = per_layer_values[order[j - 1]];
    if (min_value <= 0.0) break;  // further prefixes only shrink the min
    double candidate_log = std::log(min_value) + beta * std::log(static_cast<double>(j));
    if (candidate_log > best_log) {
      best_log = candidate_log;
      best_prefix = j;
    }
  }

  double min_value = per_layer_values[order[best_prefix - 1]];
  if (min_value > 0.0) {
    best.value = min_value * std::pow(static_cast<double>(best_prefix), beta);
  }
  best.layers.assign(order.begin(), order.begin() + best_prefix);
  std::sort(best.layers.begin(), best.layers.end());
  return best;
}

}  // namespace mlcore
