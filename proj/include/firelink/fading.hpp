#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace firelink::link {

/// Shadowed-Rician parameters: 2b is the scatter power, m the Nakagami
/// shape of the line-of-sight amplitude, zeta the line-of-sight power.
struct FadingParams {
  double b = 0.0;
  double m = 1.0;
  double zeta = 0.0;

  void validate() const;
  double mean_power() const { return 2.0 * b + zeta; }
};

/// Cubic fits of (b, m, zeta) versus elevation angle in degrees, 0 < theta <= 90.
FadingParams fading_params(double elevation_deg);

/// 1F1(a; 1; z) for z >= 0 and its natural log. The log form stays finite for
/// arguments where the value itself overflows. Throws NumericError when the
/// series fails to converge.
double log_hyp1f1_b1(double a, double z);
double hyp1f1_b1(double a, double z);

/// Density of the fading power |h|^2 at x >= 0.
double fading_pdf(double x, const FadingParams& params);

/// Draws |sqrt(Omega) e^{j phi} + z|^2 with Omega ~ Gamma(m, zeta/m),
/// phi ~ U[0, 2pi) and z circular complex Gaussian of total variance 2b.
/// One sampler per stream; not safe to share across threads.
class FadingSampler {
 public:
  FadingSampler(const FadingParams& params, std::uint64_t seed);
  double operator()();

 private:
  FadingParams params_;
  std::mt19937_64 engine_;
  std::gamma_distribution<double> los_power_;
  std::normal_distribution<double> scatter_;
  std::uniform_real_distribution<double> phase_;
};

std::vector<double> fading_sample(const FadingParams& params, std::uint64_t seed, std::size_t count);

}  // namespace firelink::link
