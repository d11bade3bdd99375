#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference in
// `kernels::scalar` and optional AVX2 / NEON variants; the unqualified entry
// points dispatch to the best variant the host CPU supports.

#include <cstdint>
#include <span>
#include <string_view>

namespace firelink::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);

/// True when the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa);

/// The variant currently used by the dispatching entry points.
Isa active_isa();

/// Pins dispatch to `isa` (tests, benchmarks). Throws ValidationError when the
/// variant is unavailable. The initial choice honours FIRELINK_ISA=scalar.
void force_isa(Isa isa);

/// Restores the automatically detected variant.
void reset_isa();

/// min_i (xs[i] - px)^2 + (ys[i] - py)^2, or +inf when empty.
/// The dispatching entry points throw ValidationError on length mismatch.
/// Result is bit-identical across variants.
double min_sq_distance(std::span<const double> xs, std::span<const double> ys, double px, double py);

/// sum_i weight[i] * (1 - miss[i]^counts[i]) with 0^0 = 1.
/// The power is evaluated by square-and-multiply so each term is
/// bit-identical across variants; only the summation order differs.
double weighted_detection_sum(std::span<const double> weight, std::span<const double> miss,
                              std::span<const std::int64_t> counts);

/// miss^count by square-and-multiply (0^0 = 1). Shared reference for the
/// vector variants.
inline double ipow(double base, std::int64_t exponent) {
  double result = 1.0;
  auto e = static_cast<std::uint64_t>(exponent);
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

namespace scalar {
double min_sq_distance(std::span<const double> xs, std::span<const double> ys, double px, double py);
double weighted_detection_sum(std::span<const double> weight, std::span<const double> miss,
                              std::span<const std::int64_t> counts);
}  // namespace scalar

#if defined(FIRELINK_HAVE_AVX2)
namespace avx2 {
double min_sq_distance(std::span<const double> xs, std::span<const double> ys, double px, double py);
double weighted_detection_sum(std::span<const double> weight, std::span<const double> miss,
                              std::span<const std::int64_t> counts);
}  // namespace avx2
#endif

#if defined(FIRELINK_HAVE_NEON)
namespace neon {
double min_sq_distance(std::span<const double> xs, std::span<const double> ys, double px, double py);
double weighted_detection_sum(std::span<const double> weight, std::span<const double> miss,
                              std::span<const std::int64_t> counts);
}  // namespace neon
#endif

}  // namespace firelink::kernels
