#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "firelink/geo.hpp"

namespace firelink::fire {

/// Thresholds of the ignition-probability chain. The wilting point and field
/// capacity have no sensible universal default and must be supplied.
struct FireModelParams {
  double b_low = 0.2;    // KgC/m^2
  double b_up = 1.0;     // KgC/m^2
  double theta_wilt = 0.0;
  double theta_field = 0.0;
  double beta_e = 0.35;
  double l_low = 0.02;   // flashes/km^2/month
  double l_up = 0.85;

  static FireModelParams with_soil(double theta_wilt, double theta_field);
  void validate() const;
};

struct RegionEnv {
  std::int64_t id = 0;
  geo::GeoPoint center{};
  double biomass = 0.0;        // KgC/m^2
  double soil_moisture = 0.0;  // volumetric fraction
  double lightning = 0.0;      // flashes/km^2/month
  double p_human = 0.0;
  double spread_rate = 0.0;    // km/h

  void validate() const;
};

struct RegionGrid {
  std::vector<RegionEnv> regions;
  double cell_area_km2 = 100.0;

  std::size_t size() const { return regions.size(); }
  /// Checks ids are 0..N-1 in order and every region is valid.
  void validate() const;
};

double p_biomass(double biomass, const FireModelParams& params);
double p_moisture(double theta, const FireModelParams& params);
double p_lightning_human(double lightning, double p_human, const FireModelParams& params);
double p_ignition(const RegionEnv& region, const FireModelParams& params);

/// Circular fire: pi * (spread_rate * hours)^2.
double burned_area_km2(double spread_rate_kmh, double hours);

/// Probability that at least one of `n_sensors` uniformly placed sensors lies
/// inside the burned area: 1 - q^n with 0^0 = 1, so zero sensors never detect.
double p_detection(std::int64_t n_sensors, double area_km2, double burned_km2);

/// q = max(0, A - burned) / A.
double miss_probability(double area_km2, double burned_km2);

/// Per-region planning inputs: ignition probability and single-sensor miss
/// probability at the detection deadline.
struct DetectionProblem {
  std::vector<double> ignition;
  std::vector<double> miss;

  std::size_t size() const { return ignition.size(); }
  void validate() const;
};

DetectionProblem detection_problem(const RegionGrid& grid, double hours, const FireModelParams& params);

/// sum_i p_I(i) * (1 - q_i^{n_i}). Throws ValidationError on a length mismatch.
double utility(const DetectionProblem& problem, std::span<const std::int64_t> counts);

/// Convenience wrapper building the problem from the grid.
double system_utility(const RegionGrid& grid, std::span<const std::int64_t> counts, double hours,
                      const FireModelParams& params);

}  // namespace firelink::fire
