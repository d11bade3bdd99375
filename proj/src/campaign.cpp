#include "firelink/campaign.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "firelink/csv.hpp"
#include "firelink/errors.hpp"
#include "firelink/kernels.hpp"

namespace firelink::campaign {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// 53-bit uniform in [0, 1); independent of the standard library's
// distribution implementations.
double unit_uniform(std::mt19937_64& engine) { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(seed ^ splitmix64(index)); }

std::vector<FireEvent> load_catalog(const std::filesystem::path& path, const grid::GridIndex& index) {
  const auto table = csv::read(path);
  const auto c_id = table.column("fire_id");
  const auto c_lat = table.column("lat");
  const auto c_lon = table.column("lon");
  const auto c_area = table.column("recorded_area_km2");
  std::vector<FireEvent> out;
  for (const auto& row : table.rows) {
    FireEvent e;
    e.id = csv::to_int(row.fields[c_id], "fire_id", row.line);
    try {
      e.ignition = geo::GeoPoint::make(csv::to_double(row.fields[c_lat], "lat", row.line),
                                       csv::to_double(row.fields[c_lon], "lon", row.line));
    } catch (const ValidationError& err) {
      throw ValidationError(path.string() + ":" + std::to_string(row.line) + ": " + err.what());
    }
    e.recorded_area_km2 = csv::to_double(row.fields[c_area], "recorded_area_km2", row.line);
    if (!(e.recorded_area_km2 >= 0.0)) {
      throw ValidationError(path.string() + ":" + std::to_string(row.line) + ": recorded area must be >= 0");
    }
    const auto region = index.locate(index.project(e.ignition));
    if (!region) {
      throw ValidationError(path.string() + ":" + std::to_string(row.line) + ": fire " + std::to_string(e.id) +
                            " lies outside the region grid");
    }
    e.region_id = *region;
    out.push_back(e);
  }
  return out;
}

void save_catalog(const std::filesystem::path& path, std::span<const FireEvent> catalog) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : catalog) {
    rows.push_back({std::to_string(e.id), csv::format(e.ignition.lat), csv::format(e.ignition.lon),
                    csv::format(e.recorded_area_km2)});
  }
  csv::write(path, {"fire_id", "lat", "lon", "recorded_area_km2"}, rows);
}

void EconomicsParams::validate() const {
  if (!(carbon_price_usd_per_ton >= 0.0) || !(device_cost_usd >= 0.0) || !(bandwidth_cost_usd >= 0.0)) {
    throw ValidationError("economics parameters must be non-negative");
  }
}

SensorField::SensorField(std::size_t regions) : xs_(regions), ys_(regions), present_(regions, false) {}

void SensorField::assign(std::size_t region, std::vector<double> xs, std::vector<double> ys) {
  xs_[region] = std::move(xs);
  ys_[region] = std::move(ys);
  present_[region] = true;
}

std::size_t SensorField::total() const {
  std::size_t n = 0;
  for (const auto& v : xs_) n += v.size();
  return n;
}

namespace {

void scatter_region(SensorField& field, const placement::Placement& placement, const grid::GridIndex& index,
                    std::uint64_t seed, std::size_t region) {
  const auto count = static_cast<std::size_t>(placement.counts[region]);
  std::vector<double> xs(count);
  std::vector<double> ys(count);
  if (count > 0) {
    std::mt19937_64 engine(derive_seed(seed, region));
    const grid::PlanarPoint corner = index.corner(region);
    const double side = index.side_km();
    for (std::size_t k = 0; k < count; ++k) {
      xs[k] = corner.x + side * unit_uniform(engine);
      ys[k] = corner.y + side * unit_uniform(engine);
    }
  }
  field.assign(region, std::move(xs), std::move(ys));
}

}  // namespace

SensorField scatter_sensors(const placement::Placement& placement, const grid::GridIndex& index, std::uint64_t seed) {
  std::vector<std::size_t> all(placement.counts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return scatter_sensors(placement, index, seed, all);
}

SensorField scatter_sensors(const placement::Placement& placement, const grid::GridIndex& index, std::uint64_t seed,
                            std::span<const std::size_t> regions) {
  SensorField field(placement.counts.size());
  for (const auto region : regions) {
    if (region >= placement.counts.size()) throw ValidationError("scatter: region index out of range");
    if (placement.counts[region] < 0) throw ValidationError("scatter: negative sensor count");
    scatter_region(field, placement, index, seed, region);
  }
  return field;
}

double detection_radius_km(const fire::RegionGrid& grid) { return std::sqrt(grid.cell_area_km2 / kPi); }

std::vector<std::size_t> regions_near(const FireEvent& event, const fire::RegionGrid& grid,
                                      const grid::GridIndex& index) {
  return index.regions_within(index.project(event.ignition), detection_radius_km(grid));
}

FireRecord carbon_for_area(const FireEvent& event, double burned_km2, const fire::RegionGrid& grid,
                           const grid::GridIndex& index) {
  FireRecord record;
  record.burned_km2 = burned_km2;
  const double radius = std::sqrt(burned_km2 / kPi);
  auto touched = index.regions_within(index.project(event.ignition), radius);
  if (touched.empty()) touched.push_back(event.region_id);
  double biomass = 0.0;
  for (const auto r : touched) biomass += grid.regions[r].biomass;
  record.biomass_avg = biomass / static_cast<double>(touched.size());
  record.carbon_ton = burned_km2 * 1.2 * record.biomass_avg * 100.0;
  return record;
}

FireRecord simulate_fire(const FireEvent& event, const SensorField& sensors, const fire::RegionGrid& grid,
                         const grid::GridIndex& index) {
  const grid::PlanarPoint origin = index.project(event.ignition);
  const double reach = detection_radius_km(grid);
  double nearest_sq = std::numeric_limits<double>::infinity();
  for (const auto region : index.regions_within(origin, reach)) {
    if (!sensors.has(region)) {
      throw std::logic_error("simulate_fire: region " + std::to_string(region) + " was not scattered");
    }
    nearest_sq = std::min(nearest_sq, kernels::min_sq_distance(sensors.xs(region), sensors.ys(region), origin.x, origin.y));
  }
  const double nearest = std::sqrt(nearest_sq);
  const double spread = grid.regions[event.region_id].spread_rate;

  if (spread == 0.0) {
    FireRecord record = carbon_for_area(event, 0.0, grid, index);
    record.degenerate = true;
    record.detected = nearest == 0.0;
    if (record.detected) record.detection_time_h = 0.0;
    return record;
  }
  // A fire that burned out below pi*d^2 never reached the sensor.
  if (nearest <= reach && kPi * nearest_sq <= event.recorded_area_km2) {
    FireRecord record = carbon_for_area(event, kPi * nearest_sq, grid, index);
    record.detected = true;
    record.detection_time_h = nearest / spread;
    return record;
  }
  return carbon_for_area(event, event.recorded_area_km2, grid, index);
}

double savings_usd(double carbon_reduction_ton, std::int64_t sensors, const EconomicsParams& econ) {
  return carbon_reduction_ton * econ.carbon_price_usd_per_ton - static_cast<double>(sensors) * econ.device_cost_usd -
         econ.bandwidth_cost_usd;
}

CampaignResult run_campaign(const fire::RegionGrid& grid, const grid::GridIndex& index,
                            const placement::Placement& placement, std::span<const FireEvent> catalog,
                            const EconomicsParams& econ, const CampaignOptions& options) {
  if (options.trials < 1) throw ValidationError("campaign: trials must be >= 1");
  econ.validate();
  placement.validate(grid.size());
  for (const auto& e : catalog) {
    if (e.region_id >= grid.size()) throw ValidationError("campaign: fire " + std::to_string(e.id) + " has no region");
  }

  CampaignResult result;
  result.scheme = options.scheme;
  result.seed = options.seed;
  result.trials = options.trials;
  result.sensors = placement.total();
  result.economics = econ;
  result.empty_catalog = catalog.empty();

  // Only regions within reach of some ignition need sensors.
  std::vector<std::size_t> needed;
  for (const auto& e : catalog) {
    const auto near = regions_near(e, grid, index);
    needed.insert(needed.end(), near.begin(), near.end());
  }
  std::sort(needed.begin(), needed.end());
  needed.erase(std::unique(needed.begin(), needed.end()), needed.end());

  const auto trials = static_cast<std::size_t>(options.trials);
  std::vector<std::vector<FireRecord>> per_trial(trials);
  auto run_trial = [&](std::size_t t) {
    const SensorField field = scatter_sensors(placement, index, derive_seed(options.seed, t), needed);
    auto& records = per_trial[t];
    records.reserve(catalog.size());
    for (const auto& e : catalog) records.push_back(simulate_fire(e, field, grid, index));
  };

  unsigned threads = options.threads != 0 ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));
  if (threads <= 1) {
    for (std::size_t t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < trials; t += threads) run_trial(t);
      });
    }
  }

  // Reduce in trial order so the result is independent of scheduling.
  const double n_trials = static_cast<double>(trials);
  for (std::size_t f = 0; f < catalog.size(); ++f) {
    const auto& e = catalog[f];
    FireSummary s;
    s.fire_id = e.id;
    s.region_id = e.region_id;
    s.recorded_area_km2 = e.recorded_area_km2;
    s.baseline_carbon_ton = carbon_for_area(e, e.recorded_area_km2, grid, index).carbon_ton;
    // Running means stay exact when every trial yields the same value, so a
    // sensor-free campaign reproduces the catalog bit for bit.
    double burned = 0.0;
    double carbon = 0.0;
    double time_sum = 0.0;
    std::int64_t detected = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const auto& r = per_trial[t][f];
      const double k = static_cast<double>(t + 1);
      burned += (r.burned_km2 - burned) / k;
      carbon += (r.carbon_ton - carbon) / k;
      if (r.degenerate) ++s.degenerate_trials;
      if (r.detected) {
        ++detected;
        time_sum += r.detection_time_h.value_or(0.0);
      }
    }
    s.burned_km2 = burned;
    s.carbon_ton = carbon;
    s.detection_rate = static_cast<double>(detected) / n_trials;
    if (detected > 0) s.mean_detection_time_h = time_sum / static_cast<double>(detected);
    result.fires.push_back(s);
  }

  auto& tot = result.totals;
  for (const auto& s : result.fires) {
    tot.burned_km2 += s.burned_km2;
    tot.carbon_ton += s.carbon_ton;
    tot.baseline_burned_km2 += s.recorded_area_km2;
    tot.baseline_carbon_ton += s.baseline_carbon_ton;
  }
  tot.carbon_reduction_ton = tot.baseline_carbon_ton - tot.carbon_ton;
  tot.carbon_value_usd = tot.carbon_reduction_ton * econ.carbon_price_usd_per_ton;
  tot.device_cost_usd = static_cast<double>(result.sensors) * econ.device_cost_usd;
  tot.bandwidth_cost_usd = econ.bandwidth_cost_usd;
  tot.savings_usd = savings_usd(tot.carbon_reduction_ton, result.sensors, econ);
  return result;
}

}  // namespace firelink::campaign
