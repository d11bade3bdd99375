#include "firelink/commands.hpp"

#include <algorithm>
#include <fstream>

#include "firelink/campaign.hpp"
#include "firelink/capacity.hpp"
#include "firelink/csv.hpp"
#include "firelink/errors.hpp"
#include "firelink/fading.hpp"
#include "firelink/grid_index.hpp"
#include "firelink/io.hpp"
#include "firelink/placement.hpp"

namespace firelink::cli {

using nlohmann::json;

Scheme parse_scheme(std::string_view text) {
  if (text == "optimized") return Scheme::Optimized;
  if (text == "uniform") return Scheme::Uniform;
  if (text == "both") return Scheme::Both;
  throw ValidationError("unknown scheme '" + std::string(text) + "' (expected optimized, uniform or both)");
}

void OutputSet::add(std::string name, std::string content) { files_.emplace_back(std::move(name), std::move(content)); }

void OutputSet::add_json(std::string name, const json& doc) { add(std::move(name), doc.dump(2) + "\n"); }

void OutputSet::commit(const std::filesystem::path& dir) const {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ValidationError("cannot create output directory " + dir.string() + ": " + ec.message());
  for (const auto& [name, content] : files_) {
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write " + (dir / name).string());
    out << content;
  }
}

namespace {

fire::RegionGrid load_grid(const config::RunConfig& cfg) {
  if (!cfg.regions_csv) throw ValidationError("config: data.regions is required for this command");
  return io::load_regions(*cfg.regions_csv, cfg.cell_area_km2);
}

link::McsTable load_mcs(const config::RunConfig& cfg) {
  return cfg.mcs_csv ? link::McsTable::load_csv(*cfg.mcs_csv) : link::McsTable::nb_iot_default();
}

std::vector<std::string> scheme_names(Scheme scheme) {
  switch (scheme) {
    case Scheme::Optimized: return {"optimized"};
    case Scheme::Uniform: return {"uniform"};
    case Scheme::Both: return {"optimized", "uniform"};
  }
  return {};
}

placement::Placement place(const std::string& scheme, const fire::RegionGrid& grid,
                           const fire::DetectionProblem& problem, std::int64_t budget) {
  if (scheme == "optimized") return placement::optimize_greedy(problem, budget);
  return placement::biomass_uniform(grid, budget).placement;
}

capacity::RadioTiming sized_timing(const config::RunConfig& cfg, const link::McsTable& mcs) {
  return capacity::timing_for(cfg.sizing, mcs, cfg.timing);
}

double bandwidth_cost(const config::RunConfig& cfg, const capacity::RadioTiming& timing, std::int64_t sensors) {
  return capacity::spectrum_cost_usd(capacity::bandwidth_required_hz(sensors, timing, cfg.exception_traffic),
                                     cfg.usd_per_hz);
}

}  // namespace

json run_plan(const config::RunConfig& cfg, const CommandOptions& opts) {
  const auto grid = load_grid(cfg);
  const grid::GridIndex index(grid);
  const auto problem = fire::detection_problem(grid, cfg.hours, cfg.fire);
  const auto uniform_info = placement::biomass_uniform(grid, cfg.budget);
  const auto schemes = scheme_names(opts.scheme);

  OutputSet out;
  json report{{"hours", cfg.hours},
              {"budget", cfg.budget},
              {"regions", grid.size()},
              {"eligible_regions", uniform_info.eligible_regions},
              {"uniform_warning", uniform_info.no_eligible_regions},
              {"schemes", json::object()}};

  for (const auto& name : schemes) {
    const auto p = place(name, grid, problem, cfg.budget);
    const auto max_it = std::max_element(p.counts.begin(), p.counts.end());
    report["schemes"][name] = {
        {"utility", fire::utility(problem, p.counts)},
        {"sensors_used", p.total()},
        {"max_per_region", max_it == p.counts.end() ? 0 : *max_it},
        {"nonzero_regions", std::count_if(p.counts.begin(), p.counts.end(), [](auto n) { return n > 0; })}};

    std::vector<std::vector<std::string>> heat_rows;
    for (std::size_t i = 0; i < p.counts.size(); ++i) {
      const auto cell = index.cell_of(i);
      heat_rows.push_back({std::to_string(i), std::to_string(cell.row), std::to_string(cell.col),
                           csv::format(grid.regions[i].center.lat), csv::format(grid.regions[i].center.lon),
                           std::to_string(p.counts[i])});
    }
    out.add("placement_" + name + ".csv", io::render_placement_csv(p));
    out.add_json("placement_" + name + ".json", json(p));
    out.add("heatmap_" + name + ".csv", csv::render({"region_id", "row", "col", "lat", "lon", "n_sensors"}, heat_rows));
  }

  if (!cfg.plan_sweep.empty()) {
    std::vector<std::string> header{"budget"};
    for (const auto& name : schemes) header.push_back("utility_" + name);
    std::vector<std::vector<std::string>> rows;
    json sweep = json::array();
    for (const auto k : cfg.plan_sweep) {
      std::vector<std::string> row{std::to_string(k)};
      json entry{{"budget", k}};
      for (const auto& name : schemes) {
        const double u = fire::utility(problem, place(name, grid, problem, k).counts);
        row.push_back(csv::format(u));
        entry[name] = u;
      }
      rows.push_back(std::move(row));
      sweep.push_back(std::move(entry));
    }
    out.add("utility_vs_budget.csv", csv::render(header, rows));
    report["sweep"] = std::move(sweep);
  }

  out.add_json("plan_report.json", report);
  out.commit(opts.out_dir);
  return report;
}

json run_linkbudget(const config::RunConfig& cfg, const CommandOptions& opts) {
  const auto mcs = load_mcs(cfg);
  std::vector<config::LinkSite> sites = cfg.link_sites;
  if (opts.location) {
    sites = {config::LinkSite{"custom", *opts.location, cfg.device.off_boresight_deg, std::nullopt}};
  }
  if (sites.empty()) throw ValidationError("linkbudget: no location given and no link.sites configured");

  json doc{{"primary_mode", std::string(link::to_string(opts.mode))}, {"sites", json::array()}};
  for (const auto& site : sites) {
    link::DeviceConfig device = cfg.device;
    device.off_boresight_deg = site.off_boresight_deg;
    const auto linear = link::snr_db(device, cfg.satellite, site.location, link::BeamMode::Linear, mcs);
    const auto scaled = link::snr_db(device, cfg.satellite, site.location, link::BeamMode::DbScaled, mcs);
    const auto& primary = opts.mode == link::BeamMode::Linear ? linear : scaled;
    json entry{{"name", site.name},
               {"lat", site.location.lat},
               {"lon", site.location.lon},
               {"snr_db", json(primary).at("snr_db")},
               {"mcs_level", primary.mcs_level},
               {"modes", {{"linear", linear}, {"db-scaled", scaled}}},
               {"fading", link::fading_params(linear.elevation_deg)}};
    if (site.reference_snr_db) {
      entry["reference_snr_db"] = *site.reference_snr_db;
      entry["deviation_db"] = {{"linear", linear.snr_db - *site.reference_snr_db},
                               {"db-scaled", scaled.snr_db - *site.reference_snr_db}};
    }
    doc["sites"].push_back(std::move(entry));
  }
  OutputSet out;
  out.add_json("linkbudget.json", doc);
  out.commit(opts.out_dir);
  return doc;
}

json run_capacity(const config::RunConfig& cfg, const CommandOptions& opts) {
  const auto mcs = load_mcs(cfg);
  const auto timing = sized_timing(cfg, mcs);
  const double period = cfg.exception_traffic.reference_period_s;
  const auto periodic = capacity::devices_per_carrier_periodic(timing, cfg.periodic_traffic, period);

  auto sizing_for = [&](std::int64_t k) {
    const double bw = capacity::bandwidth_required_hz(k, timing, cfg.exception_traffic);
    return json{{"sensors", k},
                {"carriers", capacity::carriers_required(k, timing, cfg.exception_traffic)},
                {"bandwidth_hz", bw},
                {"spectrum_cost_usd", capacity::spectrum_cost_usd(bw, cfg.usd_per_hz)},
                {"exception_bytes", capacity::exception_total_bytes(k, cfg.exception_traffic)},
                {"periodic_sessions", capacity::periodic_sessions(k, cfg.observation_s, cfg.periodic_traffic)},
                {"periodic_bytes", capacity::periodic_total_bytes(k, cfg.observation_s, cfg.periodic_traffic)}};
  };

  json doc{{"sizing", cfg.sizing == capacity::SizingCase::Worst ? "worst" : "best"},
           {"timing",
            {{"rtt_ms", timing.rtt_ms},
             {"ru_time_ms", timing.ru_time_ms},
             {"ru_bw_khz", timing.ru_bw_khz},
             {"carrier_bw_khz", timing.carrier_bw_khz},
             {"rus_per_report", timing.rus_per_report},
             {"retransmission_factor", timing.retransmission_factor}}},
           {"reference_period_s", period},
           {"observation_s", cfg.observation_s},
           {"usd_per_hz", cfg.usd_per_hz},
           {"report_duration_ms", capacity::report_duration_ms(timing)},
           {"devices_per_carrier_exception", capacity::devices_per_carrier_exception(timing, period)},
           {"devices_per_carrier_periodic", {{"devices", periodic.devices}, {"overflow", periodic.overflow}}},
           {"budget", sizing_for(cfg.budget)}};

  OutputSet out;
  if (!cfg.plan_sweep.empty()) {
    json sweep = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto k : cfg.plan_sweep) {
      auto s = sizing_for(k);
      rows.push_back({std::to_string(k), std::to_string(s.at("carriers").get<std::int64_t>()),
                      csv::format(s.at("bandwidth_hz").get<double>()),
                      csv::format(s.at("spectrum_cost_usd").get<double>())});
      sweep.push_back(std::move(s));
    }
    doc["sweep"] = std::move(sweep);
    out.add("capacity_vs_budget.csv", csv::render({"budget", "carriers", "bandwidth_hz", "spectrum_cost_usd"}, rows));
  }
  out.add_json("capacity.json", doc);
  out.commit(opts.out_dir);
  return doc;
}

json run_simulate(const config::RunConfig& cfg, const CommandOptions& opts) {
  const auto grid = load_grid(cfg);
  const grid::GridIndex index(grid);
  if (!cfg.fires_csv) throw ValidationError("config: data.fires is required for simulate");
  const auto catalog = campaign::load_catalog(*cfg.fires_csv, index);
  const auto mcs = load_mcs(cfg);
  const auto timing = sized_timing(cfg, mcs);
  const auto problem = fire::detection_problem(grid, cfg.hours, cfg.fire);
  const auto schemes = scheme_names(opts.scheme);
  const std::uint64_t seed = opts.seed.value_or(cfg.seed);

  auto economics_for = [&](std::int64_t k, double device_cost) {
    campaign::EconomicsParams econ;
    econ.carbon_price_usd_per_ton = cfg.carbon_price_usd_per_ton();
    econ.device_cost_usd = device_cost;
    econ.bandwidth_cost_usd = bandwidth_cost(cfg, timing, k);
    return econ;
  };
  auto simulate = [&](const std::string& name, std::int64_t k) {
    campaign::CampaignOptions options;
    options.trials = cfg.trials;
    options.seed = seed;
    options.scheme = name;
    return campaign::run_campaign(grid, index, place(name, grid, problem, k), catalog,
                                  economics_for(k, cfg.device_cost_case_a_usd), options);
  };

  OutputSet out;
  json summary{{"seed", seed}, {"trials", cfg.trials}, {"budget", cfg.budget}, {"schemes", json::object()}};
  for (const auto& name : schemes) {
    const auto result = simulate(name, cfg.budget);
    summary["schemes"][name] = json(result).at("totals");
    summary["empty_catalog"] = result.empty_catalog;
    out.add_json("campaign_" + name + ".json", json(result));
    out.add("fires_" + name + ".csv", io::render_fire_table(result));
  }

  if (!cfg.campaign_sweep.empty()) {
    std::vector<std::vector<std::string>> rows;
    std::optional<campaign::CampaignTotals> baseline;
    for (const auto k : cfg.campaign_sweep) {
      for (const auto& name : schemes) {
        const auto r = simulate(name, k);
        baseline = r.totals;
        const double savings_b =
            campaign::savings_usd(r.totals.carbon_reduction_ton, r.sensors, economics_for(k, cfg.device_cost_case_b_usd));
        rows.push_back({std::to_string(k), name, csv::format(r.totals.burned_km2), csv::format(r.totals.carbon_ton),
                        csv::format(r.totals.bandwidth_cost_usd), csv::format(r.totals.savings_usd),
                        csv::format(savings_b)});
      }
    }
    if (baseline) {
      rows.push_back({"0", "catalog", csv::format(baseline->baseline_burned_km2),
                      csv::format(baseline->baseline_carbon_ton), "0", "0", "0"});
    }
    out.add("campaign_sweep.csv", csv::render({"budget", "scheme", "burned_km2", "carbon_ton", "bandwidth_cost_usd",
                                            "savings_case_a_usd", "savings_case_b_usd"},
                                           rows));
  }

  out.add_json("simulate_summary.json", summary);
  out.commit(opts.out_dir);
  return summary;
}

json run_report(const CommandOptions& opts) {
  const auto& dir = opts.out_dir;
  json report = json::object();
  auto read_if = [&](const std::string& file) -> std::optional<json> {
    const auto path = dir / file;
    if (!std::filesystem::exists(path)) return std::nullopt;
    return io::read_json(path);
  };

  if (auto plan = read_if("plan_report.json")) {
    json utilities = json::object();
    for (const auto& [name, s] : plan->at("schemes").items()) utilities[name] = s.at("utility");
    report["plan"] = {{"budget", plan->at("budget")}, {"hours", plan->at("hours")}, {"utility", utilities}};
  }
  if (auto lb = read_if("linkbudget.json")) {
    json sites = json::array();
    for (const auto& s : lb->at("sites")) {
      json entry{{"name", s.at("name")}, {"snr_db", s.at("snr_db")}, {"mcs_level", s.at("mcs_level")}};
      if (s.contains("deviation_db")) entry["deviation_db"] = s.at("deviation_db");
      sites.push_back(std::move(entry));
    }
    report["linkbudget"] = std::move(sites);
  }
  if (auto cap = read_if("capacity.json")) {
    report["capacity"] = {{"report_duration_ms", cap->at("report_duration_ms")},
                          {"devices_per_carrier_exception", cap->at("devices_per_carrier_exception")},
                          {"budget", cap->at("budget")}};
  }
  for (const auto* name : {"optimized", "uniform"}) {
    if (auto c = read_if(std::string("campaign_") + name + ".json")) {
      const auto result = c->get<campaign::CampaignResult>();
      report["campaign"][name] = json(result).at("totals");
      report["campaign"][name]["sensors"] = result.sensors;
    }
  }
  if (report.empty()) throw ValidationError("report: no command outputs found in " + dir.string());

  OutputSet out;
  out.add_json("report.json", report);
  out.commit(dir);
  return report;
}

}  // namespace firelink::cli
