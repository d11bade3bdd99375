#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "firelink/fire_model.hpp"
#include "firelink/grid_index.hpp"
#include "firelink/placement.hpp"

namespace firelink::campaign {

struct FireEvent {
  std::int64_t id = 0;
  geo::GeoPoint ignition{};
  std::size_t region_id = 0;
  double recorded_area_km2 = 0.0;
};

/// CSV with header `fire_id,lat,lon,recorded_area_km2`. Each ignition is
/// mapped to its grid cell; ignitions outside the grid are rejected.
std::vector<FireEvent> load_catalog(const std::filesystem::path& path, const grid::GridIndex& index);
void save_catalog(const std::filesystem::path& path, std::span<const FireEvent> catalog);

struct EconomicsParams {
  double carbon_price_usd_per_ton = 200.0;  // 20 USD carbon tax times gamma = 10
  double device_cost_usd = 10.0;
  double bandwidth_cost_usd = 0.0;

  void validate() const;
};

/// Sensor positions (planar km) per region. Regions that were not scattered
/// are marked absent so a partial field cannot be mistaken for an empty one.
class SensorField {
 public:
  explicit SensorField(std::size_t regions);

  void assign(std::size_t region, std::vector<double> xs, std::vector<double> ys);
  bool has(std::size_t region) const { return present_[region]; }
  std::span<const double> xs(std::size_t region) const { return xs_[region]; }
  std::span<const double> ys(std::size_t region) const { return ys_[region]; }
  std::size_t regions() const { return xs_.size(); }
  std::size_t total() const;

 private:
  std::vector<std::vector<double>> xs_;
  std::vector<std::vector<double>> ys_;
  std::vector<bool> present_;
};

/// Stream seed for (seed, index); used for trials and for regions.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// n_i points uniform over region i's square. Every region draws from its own
/// stream derived from (seed, region), and points are drawn in order, so a
/// region with more sensors extends, rather than replaces, the smaller set.
SensorField scatter_sensors(const placement::Placement& placement, const grid::GridIndex& index,
                            std::uint64_t seed);
/// Same positions, restricted to `regions`; other regions stay absent.
SensorField scatter_sensors(const placement::Placement& placement, const grid::GridIndex& index, std::uint64_t seed,
                            std::span<const std::size_t> regions);

/// Search radius beyond which a fire counts as undetected: sqrt(A / pi).
double detection_radius_km(const fire::RegionGrid& grid);

/// Regions whose sensors could detect a fire at this ignition point.
std::vector<std::size_t> regions_near(const FireEvent& event, const fire::RegionGrid& grid,
                                      const grid::GridIndex& index);

struct FireRecord {
  std::optional<double> detection_time_h;
  double burned_km2 = 0.0;
  double carbon_ton = 0.0;
  double biomass_avg = 0.0;
  bool detected = false;
  bool degenerate = false;  // zero spread rate: the fire never grows
};

/// Mean biomass over all regions a circle of `burned_km2` around the
/// ignition touches, and carbon = burned * 1.2 * B_avg * 100 tons.
FireRecord carbon_for_area(const FireEvent& event, double burned_km2, const fire::RegionGrid& grid,
                           const grid::GridIndex& index);

/// One fire against one sensor realisation. The circle grows until it reaches
/// the nearest sensor. The fire burns its recorded area instead when no sensor
/// lies within detection_radius_km, or when the recorded fire stopped growing
/// before its circle reached the sensor. Throws std::logic_error if a region that must be
/// searched was not scattered.
FireRecord simulate_fire(const FireEvent& event, const SensorField& sensors, const fire::RegionGrid& grid,
                         const grid::GridIndex& index);

struct FireSummary {
  std::int64_t fire_id = 0;
  std::size_t region_id = 0;
  double recorded_area_km2 = 0.0;
  double baseline_carbon_ton = 0.0;
  double detection_rate = 0.0;  // fraction of trials detected
  std::optional<double> mean_detection_time_h;  // over detected trials
  double burned_km2 = 0.0;      // mean over trials
  double carbon_ton = 0.0;      // mean over trials
  std::int64_t degenerate_trials = 0;
};

struct CampaignTotals {
  double burned_km2 = 0.0;
  double carbon_ton = 0.0;
  double baseline_burned_km2 = 0.0;
  double baseline_carbon_ton = 0.0;
  double carbon_reduction_ton = 0.0;
  double carbon_value_usd = 0.0;
  double device_cost_usd = 0.0;
  double bandwidth_cost_usd = 0.0;
  double savings_usd = 0.0;
};

struct CampaignResult {
  std::string scheme;
  std::uint64_t seed = 0;
  std::int64_t trials = 0;
  std::int64_t sensors = 0;
  bool empty_catalog = false;
  EconomicsParams economics;
  std::vector<FireSummary> fires;
  CampaignTotals totals;
};

/// Reduction * carbon price - sensors * device cost - bandwidth cost.
double savings_usd(double carbon_reduction_ton, std::int64_t sensors, const EconomicsParams& econ);

struct CampaignOptions {
  std::int64_t trials = 20;
  std::uint64_t seed = 0;
  std::string scheme = "optimized";
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Averages every fire over `trials` independent sensor scatters. Trial t uses
/// the stream derive_seed(seed, t), so results do not depend on thread count.
CampaignResult run_campaign(const fire::RegionGrid& grid, const grid::GridIndex& index,
                            const placement::Placement& placement, std::span<const FireEvent> catalog,
                            const EconomicsParams& econ, const CampaignOptions& options);

}  // namespace firelink::campaign
