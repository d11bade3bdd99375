// AArch64 Advanced SIMD variants. Two double lanes per vector.

#include <arm_neon.h>

#include <algorithm>
#include <limits>

#include "firelink/kernels.hpp"

namespace firelink::kernels::neon {

double min_sq_distance(std::span<const double> xs, std::span<const double> ys, double px, double py) {
  const std::size_t n = std::min(xs.size(), ys.size());
  const float64x2_t vpx = vdupq_n_f64(px);
  const float64x2_t vpy = vdupq_n_f64(py);
  float64x2_t vbest = vdupq_n_f64(std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t dx = vsubq_f64(vld1q_f64(xs.data() + i), vpx);
    const float64x2_t dy = vsubq_f64(vld1q_f64(ys.data() + i), vpy);
    // Separate multiply and add; vfmaq would round differently from scalar.
    const float64x2_t d2 = vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy));
    vbest = vminq_f64(vbest, d2);
  }
  double best = std::min(vgetq_lane_f64(vbest, 0), vgetq_lane_f64(vbest, 1));
  for (; i < n; ++i) {
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
  const float64x2_t one = vdupq_n_f64(1.0);
  const uint64x2_t ione = vdupq_n_u64(1);
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t base = vld1q_f64(miss.data() + i);
    uint64x2_t e = vreinterpretq_u64_s64(vld1q_s64(counts.data() + i));
    float64x2_t result = one;
    while ((vgetq_lane_u64(e, 0) | vgetq_lane_u64(e, 1)) != 0) {
      const uint64x2_t take = vceqq_u64(vandq_u64(e, ione), ione);
      result = vbslq_f64(take, vmulq_f64(result, base), result);
      base = vmulq_f64(base, base);
      e = vshrq_n_u64(e, 1);
    }
    const float64x2_t w = vld1q_f64(weight.data() + i);
    acc = vaddq_f64(acc, vmulq_f64(w, vsubq_f64(one, result)));
  }
  double total = vgetq_lane_f64(acc, 0) + vgetq_lane_f64(acc, 1);
  for (; i < n; ++i) total += weight[i] * (1.0 - ipow(miss[i], counts[i]));
  return total;
}

}  // namespace firelink::kernels::neon
