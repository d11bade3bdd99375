// Compiled with -mavx2 only; never called unless the host reports AVX2.
// FMA is deliberately not enabled so products round exactly like the scalar
// reference.

#include <immintrin.h>

#include <algorithm>
#include <limits>

#include "firelink/kernels.hpp"

namespace firelink::kernels::avx2 {

double min_sq_distance(std::span<const double> xs, std::span<const double> ys, double px, double py) {
  const std::size_t n = std::min(xs.size(), ys.size());
  const __m256d vpx = _mm256_set1_pd(px);
  const __m256d vpy = _mm256_set1_pd(py);
  __m256d vbest = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs.data() + i), vpx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys.data() + i), vpy);
    const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    vbest = _mm256_min_pd(vbest, d2);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, vbest);
  double best = std::min(std::min(lanes[0], lanes[1]), std::min(lanes[2], lanes[3]));
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
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256i ione = _mm256_set1_epi64x(1);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d base = _mm256_loadu_pd(miss.data() + i);
    __m256i e = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(counts.data() + i));
    __m256d result = one;
    // Square-and-multiply in lockstep; lanes whose exponent is exhausted keep
    // their result untouched.
    while (!_mm256_testz_si256(e, e)) {
      const __m256i bit = _mm256_and_si256(e, ione);
      const __m256d take = _mm256_castsi256_pd(_mm256_cmpeq_epi64(bit, ione));
      result = _mm256_blendv_pd(result, _mm256_mul_pd(result, base), take);
      base = _mm256_mul_pd(base, base);
      e = _mm256_srli_epi64(e, 1);
    }
    const __m256d w = _mm256_loadu_pd(weight.data() + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(w, _mm256_sub_pd(one, result)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) total += weight[i] * (1.0 - ipow(miss[i], counts[i]));
  return total;
}

}  // namespace firelink::kernels::avx2
