#include <algorithm>
#include <limits>

#include "firelink/kernels.hpp"

namespace firelink::kernels::scalar {

double min_sq_distance(std::span<const double> xs, std::span<const double> ys, double px, double py) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = std::min(xs.size(), ys.size());
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - px;
    const double dy = ys[i] - py;
    const double dx2 = dx * dx;
    const double dy2 = dy * dy;
    best = std::min(best, dx2 + dy2);
  }
  return best;
}

double weighted_detection_sum(std::span<const double> weight, std::span<const double> miss,
                              std::span<const std::int64_t> counts) {
  const std::size_t n = std::min({weight.size(), miss.size(), counts.size()});
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double miss_all = ipow(miss[i], counts[i]);
    total += weight[i] * (1.0 - miss_all);
  }
  return total;
}

}  // namespace firelink::kernels::scalar
