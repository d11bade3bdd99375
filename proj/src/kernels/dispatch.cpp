#include <atomic>
#include <cstdlib>
#include <string>

#include "firelink/errors.hpp"
#include "firelink/kernels.hpp"

namespace firelink::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(FIRELINK_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa detect() {
  if (const char* env = std::getenv("FIRELINK_ISA"); env != nullptr && std::string(env) == "scalar") {
    return Isa::Scalar;
  }
#if defined(FIRELINK_HAVE_NEON)
  return Isa::Neon;
#else
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
#endif
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2: return cpu_has_avx2();
    case Isa::Neon:
#if defined(FIRELINK_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw ValidationError("kernel variant not available: " + std::string(isa_name(isa)));
  }
  current().store(isa, std::memory_order_relaxed);
}

void reset_isa() { current().store(detect(), std::memory_order_relaxed); }

double min_sq_distance(std::span<const double> xs, std::span<const double> ys, double px, double py) {
  if (xs.size() != ys.size()) throw ValidationError("min_sq_distance: xs and ys differ in length");
  switch (active_isa()) {
#if defined(FIRELINK_HAVE_AVX2)
    case Isa::Avx2: return avx2::min_sq_distance(xs, ys, px, py);
#endif
#if defined(FIRELINK_HAVE_NEON)
    case Isa::Neon: return neon::min_sq_distance(xs, ys, px, py);
#endif
    default: return scalar::min_sq_distance(xs, ys, px, py);
  }
}

double weighted_detection_sum(std::span<const double> weight, std::span<const double> miss,
                              std::span<const std::int64_t> counts) {
  if (weight.size() != miss.size() || weight.size() != counts.size()) {
    throw ValidationError("weighted_detection_sum: input lengths differ");
  }
  switch (active_isa()) {
#if defined(FIRELINK_HAVE_AVX2)
    case Isa::Avx2: return avx2::weighted_detection_sum(weight, miss, counts);
#endif
#if defined(FIRELINK_HAVE_NEON)
    case Isa::Neon: return neon::weighted_detection_sum(weight, miss, counts);
#endif
    default: return scalar::weighted_detection_sum(weight, miss, counts);
  }
}

}  // namespace firelink::kernels
