#include "firelink/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <string>

#include "firelink/csv.hpp"
#include "firelink/errors.hpp"

namespace firelink::io {

namespace {

std::string located(const std::filesystem::path& path, std::size_t line, const std::string& msg) {
  return path.string() + ":" + std::to_string(line) + ": " + msg;
}

std::string opt_to_text(const std::optional<double>& v) { return v ? csv::format(*v) : std::string(); }

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << text;
}

}  // namespace

fire::RegionGrid load_regions(const std::filesystem::path& path, double cell_area_km2) {
  const auto table = csv::read(path);
  if (table.rows.empty()) throw ValidationError(path.string() + ": no region rows");
  const auto c_id = table.column("id");
  const auto c_lat = table.column("lat");
  const auto c_lon = table.column("lon");
  const auto c_bio = table.column("biomass");
  const auto c_soil = table.column("soil_moisture");
  const auto c_light = table.column("lightning");
  const auto c_human = table.column("p_human");
  const auto c_spread = table.column("spread_rate");

  const std::size_t n = table.rows.size();
  std::vector<std::optional<fire::RegionEnv>> slots(n);
  for (const auto& row : table.rows) {
    try {
      fire::RegionEnv r;
      r.id = csv::to_int(row.fields[c_id], "id", row.line);
      r.center = geo::GeoPoint::make(csv::to_double(row.fields[c_lat], "lat", row.line),
                                     csv::to_double(row.fields[c_lon], "lon", row.line));
      r.biomass = csv::to_double(row.fields[c_bio], "biomass", row.line);
      r.soil_moisture = csv::to_double(row.fields[c_soil], "soil_moisture", row.line);
      r.lightning = csv::to_double(row.fields[c_light], "lightning", row.line);
      r.p_human = csv::to_double(row.fields[c_human], "p_human", row.line);
      r.spread_rate = csv::to_double(row.fields[c_spread], "spread_rate", row.line);
      r.validate();
      if (r.id < 0 || static_cast<std::size_t>(r.id) >= n) {
        throw ValidationError("region id " + std::to_string(r.id) + " outside 0.." + std::to_string(n - 1));
      }
      auto& slot = slots[static_cast<std::size_t>(r.id)];
      if (slot) throw ValidationError("duplicate region id " + std::to_string(r.id));
      slot = r;
    } catch (const ValidationError& err) {
      throw ValidationError(located(path, row.line, err.what()));
    }
  }
  fire::RegionGrid grid;
  grid.cell_area_km2 = cell_area_km2;
  grid.regions.reserve(n);
  // With n rows, unique ids in [0, n) leave no gaps.
  for (auto& slot : slots) grid.regions.push_back(*slot);
  grid.validate();
  return grid;
}

void save_regions(const std::filesystem::path& path, const fire::RegionGrid& grid) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(grid.size());
  for (const auto& r : grid.regions) {
    rows.push_back({std::to_string(r.id), csv::format(r.center.lat), csv::format(r.center.lon), csv::format(r.biomass),
                    csv::format(r.soil_moisture), csv::format(r.lightning), csv::format(r.p_human),
                    csv::format(r.spread_rate)});
  }
  csv::write(path, {"id", "lat", "lon", "biomass", "soil_moisture", "lightning", "p_human", "spread_rate"}, rows);
}

std::string render_placement_csv(const placement::Placement& placement) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(placement.counts.size());
  for (std::size_t i = 0; i < placement.counts.size(); ++i) {
    rows.push_back({std::to_string(i), std::to_string(placement.counts[i])});
  }
  return csv::render({"region_id", "n_sensors"}, rows);
}

void save_placement_csv(const std::filesystem::path& path, const placement::Placement& placement) {
  write_text(path, render_placement_csv(placement));
}

placement::Placement load_placement_csv(const std::filesystem::path& path, std::size_t regions,
                                        std::optional<std::int64_t> budget) {
  const auto table = csv::read(path);
  const auto c_id = table.column("region_id");
  const auto c_n = table.column("n_sensors");
  placement::Placement p{std::vector<std::int64_t>(regions, 0), 0};
  std::vector<bool> seen(regions, false);
  for (const auto& row : table.rows) {
    const auto id = csv::to_int(row.fields[c_id], "region_id", row.line);
    if (id < 0 || static_cast<std::size_t>(id) >= regions) {
      throw ValidationError(located(path, row.line, "region_id " + std::to_string(id) + " out of range"));
    }
    if (seen[static_cast<std::size_t>(id)]) {
      throw ValidationError(located(path, row.line, "duplicate region_id " + std::to_string(id)));
    }
    seen[static_cast<std::size_t>(id)] = true;
    p.counts[static_cast<std::size_t>(id)] = csv::to_int(row.fields[c_n], "n_sensors", row.line);
  }
  if (table.rows.size() != regions) {
    throw ValidationError(path.string() + ": expected " + std::to_string(regions) + " regions, found " +
                          std::to_string(table.rows.size()));
  }
  p.budget = budget.value_or(p.total());
  p.validate(regions);
  return p;
}

std::string render_fire_table(const campaign::CampaignResult& result) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : result.fires) {
    rows.push_back({std::to_string(s.fire_id), std::to_string(s.region_id), csv::format(s.recorded_area_km2),
                    csv::format(s.baseline_carbon_ton), csv::format(s.detection_rate),
                    opt_to_text(s.mean_detection_time_h), csv::format(s.burned_km2), csv::format(s.carbon_ton),
                    std::to_string(s.degenerate_trials)});
  }
  return csv::render({"fire_id", "region_id", "recorded_area_km2", "baseline_carbon_ton", "detection_rate",
                      "mean_detection_time_h", "burned_km2", "carbon_ton", "degenerate_trials"},
                     rows);
}

void save_fire_table(const std::filesystem::path& path, const campaign::CampaignResult& result) {
  write_text(path, render_fire_table(result));
}

std::vector<campaign::FireSummary> load_fire_table(const std::filesystem::path& path) {
  const auto table = csv::read(path);
  std::vector<campaign::FireSummary> out;
  for (const auto& row : table.rows) {
    const auto& f = row.fields;
    campaign::FireSummary s;
    s.fire_id = csv::to_int(f[table.column("fire_id")], "fire_id", row.line);
    s.region_id = static_cast<std::size_t>(csv::to_int(f[table.column("region_id")], "region_id", row.line));
    s.recorded_area_km2 = csv::to_double(f[table.column("recorded_area_km2")], "recorded_area_km2", row.line);
    s.baseline_carbon_ton = csv::to_double(f[table.column("baseline_carbon_ton")], "baseline_carbon_ton", row.line);
    s.detection_rate = csv::to_double(f[table.column("detection_rate")], "detection_rate", row.line);
    const auto& t = f[table.column("mean_detection_time_h")];
    if (!t.empty()) s.mean_detection_time_h = csv::to_double(t, "mean_detection_time_h", row.line);
    s.burned_km2 = csv::to_double(f[table.column("burned_km2")], "burned_km2", row.line);
    s.carbon_ton = csv::to_double(f[table.column("carbon_ton")], "carbon_ton", row.line);
    s.degenerate_trials = csv::to_int(f[table.column("degenerate_trials")], "degenerate_trials", row.line);
    out.push_back(s);
  }
  return out;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& doc) {
  write_text(path, doc.dump(2) + "\n");
}

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& err) {
    throw ValidationError(path.string() + ": " + err.what());
  }
}

}  // namespace firelink::io

namespace {

// JSON has no infinities; they are written as null and read back as -inf,
// the only non-finite value the link budget produces.
nlohmann::json finite_or_null(double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); }
double null_as_neg_inf(const nlohmann::json& j) {
  return j.is_null() ? -std::numeric_limits<double>::infinity() : j.get<double>();
}

}  // namespace

namespace firelink::placement {

void to_json(nlohmann::json& j, const Placement& p) {
  j = nlohmann::json{{"budget", p.budget}, {"counts", p.counts}, {"total", p.total()}};
}

void from_json(const nlohmann::json& j, Placement& p) {
  p.budget = j.at("budget").get<std::int64_t>();
  p.counts = j.at("counts").get<std::vector<std::int64_t>>();
}

}  // namespace firelink::placement

namespace firelink::link {

void to_json(nlohmann::json& j, const LinkResult& r) {
  j = nlohmann::json{{"mode", std::string(to_string(r.mode))},
                     {"distance_to_beam_center_km", r.distance_to_beam_center_km},
                     {"slant_range_km", r.slant_range_km},
                     {"elevation_deg", r.elevation_deg},
                     {"rolloff_factor", r.rolloff_factor},
                     {"tx_power_dbm", r.tx_power_dbm},
                     {"antenna_gain_dbi", r.antenna_gain_dbi},
                     {"beam_gain_dbi", finite_or_null(r.beam_gain_dbi)},
                     {"fspl_db", r.fspl_db},
                     {"other_losses_db", r.other_losses_db},
                     {"noise_power_dbm", r.noise_power_dbm},
                     {"snr_db", finite_or_null(r.snr_db)},
                     {"mcs_level", r.mcs_level}};
}

void from_json(const nlohmann::json& j, LinkResult& r) {
  r.mode = parse_beam_mode(j.at("mode").get<std::string>());
  r.distance_to_beam_center_km = j.at("distance_to_beam_center_km").get<double>();
  r.slant_range_km = j.at("slant_range_km").get<double>();
  r.elevation_deg = j.at("elevation_deg").get<double>();
  r.rolloff_factor = j.at("rolloff_factor").get<double>();
  r.tx_power_dbm = j.at("tx_power_dbm").get<double>();
  r.antenna_gain_dbi = j.at("antenna_gain_dbi").get<double>();
  r.beam_gain_dbi = null_as_neg_inf(j.at("beam_gain_dbi"));
  r.fspl_db = j.at("fspl_db").get<double>();
  r.other_losses_db = j.at("other_losses_db").get<double>();
  r.noise_power_dbm = j.at("noise_power_dbm").get<double>();
  r.snr_db = null_as_neg_inf(j.at("snr_db"));
  r.mcs_level = j.at("mcs_level").get<int>();
}

void to_json(nlohmann::json& j, const FadingParams& p) { j = nlohmann::json{{"b", p.b}, {"m", p.m}, {"zeta", p.zeta}}; }

void from_json(const nlohmann::json& j, FadingParams& p) {
  p.b = j.at("b").get<double>();
  p.m = j.at("m").get<double>();
  p.zeta = j.at("zeta").get<double>();
}

}  // namespace firelink::link

namespace firelink::campaign {

void to_json(nlohmann::json& j, const FireSummary& s) {
  j = nlohmann::json{{"fire_id", s.fire_id},
                     {"region_id", s.region_id},
                     {"recorded_area_km2", s.recorded_area_km2},
                     {"baseline_carbon_ton", s.baseline_carbon_ton},
                     {"detection_rate", s.detection_rate},
                     {"mean_detection_time_h", s.mean_detection_time_h ? nlohmann::json(*s.mean_detection_time_h)
                                                                       : nlohmann::json(nullptr)},
                     {"burned_km2", s.burned_km2},
                     {"carbon_ton", s.carbon_ton},
                     {"degenerate_trials", s.degenerate_trials}};
}

void from_json(const nlohmann::json& j, FireSummary& s) {
  s.fire_id = j.at("fire_id").get<std::int64_t>();
  s.region_id = j.at("region_id").get<std::size_t>();
  s.recorded_area_km2 = j.at("recorded_area_km2").get<double>();
  s.baseline_carbon_ton = j.at("baseline_carbon_ton").get<double>();
  s.detection_rate = j.at("detection_rate").get<double>();
  const auto& t = j.at("mean_detection_time_h");
  s.mean_detection_time_h = t.is_null() ? std::nullopt : std::optional<double>(t.get<double>());
  s.burned_km2 = j.at("burned_km2").get<double>();
  s.carbon_ton = j.at("carbon_ton").get<double>();
  s.degenerate_trials = j.at("degenerate_trials").get<std::int64_t>();
}

void to_json(nlohmann::json& j, const CampaignResult& r) {
  const auto& t = r.totals;
  j = nlohmann::json{
      {"scheme", r.scheme},
      {"seed", r.seed},
      {"trials", r.trials},
      {"sensors", r.sensors},
      {"empty_catalog", r.empty_catalog},
      {"economics",
       {{"carbon_price_usd_per_ton", r.economics.carbon_price_usd_per_ton},
        {"device_cost_usd", r.economics.device_cost_usd},
        {"bandwidth_cost_usd", r.economics.bandwidth_cost_usd}}},
      {"totals",
       {{"burned_km2", t.burned_km2},
        {"carbon_ton", t.carbon_ton},
        {"baseline_burned_km2", t.baseline_burned_km2},
        {"baseline_carbon_ton", t.baseline_carbon_ton},
        {"carbon_reduction_ton", t.carbon_reduction_ton},
        {"carbon_value_usd", t.carbon_value_usd},
        {"device_cost_usd", t.device_cost_usd},
        {"bandwidth_cost_usd", t.bandwidth_cost_usd},
        {"savings_usd", t.savings_usd}}},
      {"fires", r.fires}};
}

void from_json(const nlohmann::json& j, CampaignResult& r) {
  r.scheme = j.at("scheme").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.trials = j.at("trials").get<std::int64_t>();
  r.sensors = j.at("sensors").get<std::int64_t>();
  r.empty_catalog = j.at("empty_catalog").get<bool>();
  const auto& e = j.at("economics");
  r.economics.carbon_price_usd_per_ton = e.at("carbon_price_usd_per_ton").get<double>();
  r.economics.device_cost_usd = e.at("device_cost_usd").get<double>();
  r.economics.bandwidth_cost_usd = e.at("bandwidth_cost_usd").get<double>();
  const auto& t = j.at("totals");
  r.totals.burned_km2 = t.at("burned_km2").get<double>();
  r.totals.carbon_ton = t.at("carbon_ton").get<double>();
  r.totals.baseline_burned_km2 = t.at("baseline_burned_km2").get<double>();
  r.totals.baseline_carbon_ton = t.at("baseline_carbon_ton").get<double>();
  r.totals.carbon_reduction_ton = t.at("carbon_reduction_ton").get<double>();
  r.totals.carbon_value_usd = t.at("carbon_value_usd").get<double>();
  r.totals.device_cost_usd = t.at("device_cost_usd").get<double>();
  r.totals.bandwidth_cost_usd = t.at("bandwidth_cost_usd").get<double>();
  r.totals.savings_usd = t.at("savings_usd").get<double>();
  r.fires = j.at("fires").get<std::vector<FireSummary>>();
}

}  // namespace firelink::campaign
