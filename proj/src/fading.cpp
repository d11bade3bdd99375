#include "firelink/fading.hpp"

#include <cmath>
#include <string>

#include "firelink/errors.hpp"
#include "firelink/units.hpp"

namespace firelink::link {

void FadingParams::validate() const {
  if (!(b > 0.0)) throw ValidationError("fading: b must be positive");
  if (!(m > 0.0)) throw ValidationError("fading: m must be positive");
  if (!(zeta >= 0.0)) throw ValidationError("fading: zeta must be >= 0");
}

FadingParams fading_params(double theta) {
  if (!(theta > 0.0 && theta <= 90.0)) {
    throw ValidationError("fading: elevation must lie in (0, 90], got " + std::to_string(theta));
  }
  const double t2 = theta * theta;
  const double t3 = t2 * theta;
  FadingParams p;
  p.b = -4.7943e-8 * t3 + 5.5784e-6 * t2 - 2.1344e-4 * theta + 3.271e-2;
  p.m = 6.3739e-5 * t3 + 5.8533e-4 * t2 - 1.5973e-1 * theta + 3.5156;
  p.zeta = 1.4428e-5 * t3 - 2.3798e-3 * t2 + 1.2702e-1 * theta - 1.4864;
  return p;
}

namespace {

// Large-z expansion: 1F1(a; 1; z) ~ e^z z^(a-1) / Gamma(a) * sum_k ((1-a)_k)^2 / (k! z^k).
// Returns false if the series starts diverging before reaching double precision.
bool log_hyp1f1_b1_asymptotic(double a, double z, double& out) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 200; ++k) {
    const double c = 1.0 - a + k;
    const double next = term * c * c / ((k + 1.0) * z);
    if (std::abs(next) > std::abs(term)) return false;
    term = next;
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) {
      if (!(sum > 0.0)) return false;
      out = z + (a - 1.0) * std::log(z) - std::lgamma(a) + std::log(sum);
      return true;
    }
  }
  return false;
}

}  // namespace

double log_hyp1f1_b1(double a, double z) {
  if (!(z >= 0.0) || !std::isfinite(z)) throw ValidationError("1F1: argument must be finite and >= 0");
  if (!(a > 0.0)) throw ValidationError("1F1: a must be positive");
  if (double asymptotic = 0.0; z >= 100.0 && log_hyp1f1_b1_asymptotic(a, z, asymptotic)) return asymptotic;
  // All terms are positive: t_{k+1} = t_k (a + k) z / (k + 1)^2.
  constexpr double kRescale = 1e200;
  constexpr int kMaxTerms = 1'000'000;
  double log_offset = 0.0;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < kMaxTerms; ++k) {
    const double kk = static_cast<double>(k) + 1.0;
    const double ratio = (a + k) * z / (kk * kk);
    term *= ratio;
    sum += term;
    if (sum > kRescale) {
      sum /= kRescale;
      term /= kRescale;
      log_offset += std::log(kRescale);
    }
    if (ratio < 1.0 && term <= 1e-15 * sum) return std::log(sum) + log_offset;
  }
  throw NumericError("1F1(" + std::to_string(a) + "; 1; " + std::to_string(z) + ") did not converge");
}

double hyp1f1_b1(double a, double z) { return std::exp(log_hyp1f1_b1(a, z)); }

double fading_pdf(double x, const FadingParams& p) {
  p.validate();
  if (!(x >= 0.0)) throw ValidationError("fading_pdf: x must be >= 0");
  const double two_b = 2.0 * p.b;
  const double los = two_b * p.m + p.zeta;
  const double log_alpha = p.m * std::log(two_b * p.m) - std::log(two_b) - p.m * std::log(los);
  const double beta = 1.0 / two_b;
  const double delta = p.zeta / (two_b * los);
  return std::exp(log_alpha - beta * x + log_hyp1f1_b1(p.m, delta * x));
}

namespace {

const FadingParams& validated(const FadingParams& p) {
  p.validate();
  return p;
}

}  // namespace

FadingSampler::FadingSampler(const FadingParams& params, std::uint64_t seed)
    : params_(validated(params)),
      engine_(),
      los_power_(params.m, params.zeta > 0.0 ? params.zeta / params.m : 1.0),
      scatter_(0.0, std::sqrt(params.b)),
      phase_(0.0, 2.0 * kPi) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x5eedu};
  engine_.seed(seq);
}

double FadingSampler::operator()() {
  const double omega = params_.zeta > 0.0 ? los_power_(engine_) : 0.0;
  const double phi = phase_(engine_);
  const double amplitude = std::sqrt(omega);
  const double re = amplitude * std::cos(phi) + scatter_(engine_);
  const double im = amplitude * std::sin(phi) + scatter_(engine_);
  return re * re + im * im;
}

std::vector<double> fading_sample(const FadingParams& params, std::uint64_t seed, std::size_t count) {
  if (count == 0) throw ValidationError("fading_sample: count must be >= 1");
  FadingSampler sampler(params, seed);
  std::vector<double> out(count);
  for (auto& v : out) v = sampler();
  return out;
}

}  // namespace firelink::link
