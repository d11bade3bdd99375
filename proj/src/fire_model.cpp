#include "firelink/fire_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "firelink/errors.hpp"
#include "firelink/kernels.hpp"

namespace firelink::fire {

namespace {

double ramp(double value, double low, double up) { return std::clamp((value - low) / (up - low), 0.0, 1.0); }

}  // namespace

FireModelParams FireModelParams::with_soil(double theta_wilt, double theta_field) {
  FireModelParams p;
  p.theta_wilt = theta_wilt;
  p.theta_field = theta_field;
  return p;
}

void FireModelParams::validate() const {
  if (!(b_low < b_up)) throw ValidationError("fire params: b_low must be below b_up");
  if (!(theta_wilt < theta_field)) throw ValidationError("fire params: theta_wilt must be below theta_field");
  if (!(l_low < l_up)) throw ValidationError("fire params: l_low must be below l_up");
  if (!(beta_e > 0.0)) throw ValidationError("fire params: beta_e must be positive");
}

void RegionEnv::validate() const {
  const std::string where = "region " + std::to_string(id) + ": ";
  if (!(biomass >= 0.0)) throw ValidationError(where + "biomass must be >= 0");
  if (!(p_human >= 0.0 && p_human <= 1.0)) throw ValidationError(where + "p_human must lie in [0, 1]");
  if (!(spread_rate >= 0.0)) throw ValidationError(where + "spread_rate must be >= 0");
  if (!(lightning >= 0.0)) throw ValidationError(where + "lightning must be >= 0");
  if (!std::isfinite(soil_moisture)) throw ValidationError(where + "soil_moisture is not finite");
}

void RegionGrid::validate() const {
  if (!(cell_area_km2 > 0.0)) throw ValidationError("grid: cell area must be positive");
  for (std::size_t i = 0; i < regions.size(); ++i) {
    if (regions[i].id != static_cast<std::int64_t>(i)) {
      throw ValidationError("grid: region ids must be 0..N-1 in order; found " + std::to_string(regions[i].id) +
                            " at position " + std::to_string(i));
    }
    regions[i].validate();
  }
}

double p_biomass(double biomass, const FireModelParams& params) { return ramp(biomass, params.b_low, params.b_up); }

double p_moisture(double theta, const FireModelParams& params) {
  const double beta_root = ramp(theta, params.theta_wilt, params.theta_field);
  const double t = std::tanh(1.75 * beta_root / params.beta_e);
  return 1.0 - t * t;
}

double p_lightning_human(double lightning, double p_human, const FireModelParams& params) {
  const double beta_l = ramp(lightning, params.l_low, params.l_up);
  const double intensity = beta_l / (beta_l + std::exp(1.5 - 6.0 * beta_l));
  return intensity + (1.0 - intensity) * p_human;
}

double p_ignition(const RegionEnv& region, const FireModelParams& params) {
  return p_biomass(region.biomass, params) * p_moisture(region.soil_moisture, params) *
         p_lightning_human(region.lightning, region.p_human, params);
}

double burned_area_km2(double spread_rate_kmh, double hours) {
  const double radius = spread_rate_kmh * hours;
  return kPi * radius * radius;
}

double miss_probability(double area_km2, double burned_km2) {
  return std::max(0.0, area_km2 - burned_km2) / area_km2;
}

double p_detection(std::int64_t n_sensors, double area_km2, double burned_km2) {
  return 1.0 - kernels::ipow(miss_probability(area_km2, burned_km2), n_sensors);
}

void DetectionProblem::validate() const {
  if (ignition.size() != miss.size()) throw ValidationError("detection problem: ignition/miss length mismatch");
  for (std::size_t i = 0; i < ignition.size(); ++i) {
    if (!(ignition[i] >= 0.0 && ignition[i] <= 1.0) || !(miss[i] >= 0.0 && miss[i] <= 1.0)) {
      throw ValidationError("detection problem: probabilities must lie in [0, 1] (region " + std::to_string(i) + ")");
    }
  }
}

DetectionProblem detection_problem(const RegionGrid& grid, double hours, const FireModelParams& params) {
  DetectionProblem problem;
  problem.ignition.reserve(grid.size());
  problem.miss.reserve(grid.size());
  for (const auto& region : grid.regions) {
    problem.ignition.push_back(p_ignition(region, params));
    problem.miss.push_back(miss_probability(grid.cell_area_km2, burned_area_km2(region.spread_rate, hours)));
  }
  return problem;
}

double utility(const DetectionProblem& problem, std::span<const std::int64_t> counts) {
  if (counts.size() != problem.size()) {
    throw ValidationError("utility: placement has " + std::to_string(counts.size()) + " entries, grid has " +
                          std::to_string(problem.size()));
  }
  return kernels::weighted_detection_sum(problem.ignition, problem.miss, counts);
}

double system_utility(const RegionGrid& grid, std::span<const std::int64_t> counts, double hours,
                      const FireModelParams& params) {
  return utility(detection_problem(grid, hours, params), counts);
}

}  // namespace firelink::fire
