#include "firelink/config.hpp"

#include <fstream>
#include <sstream>

#include "firelink/csv.hpp"
#include "firelink/errors.hpp"

namespace firelink::config {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

KeyValueConfig KeyValueConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str(), path.parent_path());
}

KeyValueConfig KeyValueConfig::parse(std::string_view text, std::filesystem::path base_dir) {
  KeyValueConfig cfg;
  cfg.base_dir_ = std::move(base_dir);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    auto key = trim(std::string_view(content).substr(0, eq));
    auto value = trim(std::string_view(content).substr(eq + 1));
    if (key.empty()) throw ValidationError("config line " + std::to_string(line_no) + ": empty key");
    if (cfg.values_.contains(key)) {
      throw ValidationError("config line " + std::to_string(line_no) + ": duplicate key " + key);
    }
    cfg.values_.emplace(std::move(key), Entry{std::move(value), line_no});
  }
  return cfg;
}

std::optional<std::string> KeyValueConfig::get(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return std::nullopt;
  used_.insert(key);
  return it->second.value;
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
  const auto v = get(key);
  return v ? csv::to_double(*v, key, values_.at(key).line) : fallback;
}

double KeyValueConfig::require_double(const std::string& key) const {
  if (!contains(key)) throw ValidationError("config: missing required key " + key);
  return get_double(key, 0.0);
}

std::int64_t KeyValueConfig::get_int(const std::string& key, std::int64_t fallback) const {
  const auto v = get(key);
  return v ? csv::to_int(*v, key, values_.at(key).line) : fallback;
}

std::string KeyValueConfig::get_string(const std::string& key, const std::string& fallback) const {
  return get(key).value_or(fallback);
}

std::optional<std::filesystem::path> KeyValueConfig::get_path(const std::string& key) const {
  const auto v = get(key);
  if (!v || v->empty()) return std::nullopt;
  std::filesystem::path p(*v);
  return p.is_absolute() ? p : base_dir_ / p;
}

std::vector<std::string> KeyValueConfig::get_string_list(const std::string& key) const {
  std::vector<std::string> out;
  const auto v = get(key);
  if (!v) return out;
  std::size_t start = 0;
  while (start <= v->size()) {
    const auto comma = v->find(',', start);
    auto item = trim(std::string_view(*v).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (!item.empty()) out.push_back(std::move(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::int64_t> KeyValueConfig::get_int_list(const std::string& key, std::vector<std::int64_t> fallback) const {
  if (!contains(key)) return fallback;
  std::vector<std::int64_t> out;
  for (const auto& item : get_string_list(key)) out.push_back(csv::to_int(item, key, values_.at(key).line));
  return out;
}

std::vector<std::string> KeyValueConfig::unused_keys() const {
  std::vector<std::string> out;
  for (const auto& [key, entry] : values_) {
    if (!used_.contains(key)) out.push_back(key);
  }
  return out;
}

RunConfig RunConfig::from(const KeyValueConfig& kv) {
  RunConfig c;
  c.regions_csv = kv.get_path("data.regions");
  c.fires_csv = kv.get_path("data.fires");
  c.mcs_csv = kv.get_path("data.mcs_table");
  c.cell_area_km2 = kv.get_double("grid.cell_area_km2", c.cell_area_km2);

  auto& f = c.fire;
  f.b_low = kv.get_double("fire.b_low", f.b_low);
  f.b_up = kv.get_double("fire.b_up", f.b_up);
  f.beta_e = kv.get_double("fire.beta_e", f.beta_e);
  f.l_low = kv.get_double("fire.l_low", f.l_low);
  f.l_up = kv.get_double("fire.l_up", f.l_up);
  f.theta_wilt = kv.require_double("fire.theta_wilt");
  f.theta_field = kv.require_double("fire.theta_field");

  c.hours = kv.get_double("plan.hours", c.hours);
  c.budget = kv.get_int("plan.budget", c.budget);
  c.plan_sweep = kv.get_int_list("plan.sweep", {});

  auto& s = c.satellite;
  s.sub_satellite_lon = kv.get_double("satellite.sub_satellite_lon", -125.0);
  s.altitude_km = kv.get_double("satellite.altitude_km", s.altitude_km);
  s.beam_center = geo::GeoPoint::make(kv.get_double("satellite.beam_center_lat", 37.0),
                                      kv.get_double("satellite.beam_center_lon", -122.0));
  s.beam_radius_km = kv.get_double("satellite.beam_radius_km", s.beam_radius_km);
  s.g_s_max_dbi = kv.get_double("satellite.g_max_dbi", s.g_s_max_dbi);

  auto& d = c.device;
  d.tx_power_dbm = kv.get_double("device.tx_power_dbm", d.tx_power_dbm);
  d.g_t_max_dbi = kv.get_double("device.g_max_dbi", d.g_t_max_dbi);
  d.off_boresight_deg = kv.get_double("device.off_boresight_deg", d.off_boresight_deg);
  d.carrier_hz = kv.get_double("device.carrier_hz", d.carrier_hz);
  d.noise_power_dbm = kv.get_double("device.noise_power_dbm", d.noise_power_dbm);
  d.other_losses_db = kv.get_double("device.other_losses_db", d.other_losses_db);

  for (const auto& name : kv.get_string_list("link.sites")) {
    const std::string prefix = "link." + name + ".";
    LinkSite site;
    site.name = name;
    site.location = geo::GeoPoint::make(kv.require_double(prefix + "lat"), kv.require_double(prefix + "lon"));
    site.off_boresight_deg = kv.get_double(prefix + "off_boresight_deg", d.off_boresight_deg);
    if (kv.contains(prefix + "reference_snr_db")) site.reference_snr_db = kv.get_double(prefix + "reference_snr_db", 0.0);
    c.link_sites.push_back(site);
  }

  auto& t = c.timing;
  t.rtt_ms = kv.get_double("capacity.rtt_ms", t.rtt_ms);
  t.ru_time_ms = kv.get_double("capacity.ru_time_ms", t.ru_time_ms);
  t.ru_bw_khz = kv.get_double("capacity.ru_bw_khz", t.ru_bw_khz);
  t.carrier_bw_khz = kv.get_double("capacity.carrier_bw_khz", t.carrier_bw_khz);
  t.retransmission_factor = static_cast<int>(kv.get_int("capacity.retransmission_factor", t.retransmission_factor));
  const auto sizing = kv.get_string("capacity.sizing", "worst");
  if (sizing == "worst") {
    c.sizing = capacity::SizingCase::Worst;
  } else if (sizing == "best") {
    c.sizing = capacity::SizingCase::Best;
  } else {
    throw ValidationError("config: capacity.sizing must be worst or best");
  }
  const auto payload = static_cast<int>(kv.get_int("capacity.payload_bytes", 20));
  const double period = kv.get_double("capacity.reference_period_s", 10.0);
  c.exception_traffic.payload_bytes = payload;
  c.exception_traffic.reference_period_s = period;
  c.periodic_traffic.payload_bytes = payload;
  c.periodic_traffic.reference_period_s = period;
  c.periodic_traffic.sessions_coefficient =
      kv.get_double("capacity.sessions_per_day", c.periodic_traffic.sessions_coefficient);
  c.observation_s = kv.get_double("capacity.observation_s", c.observation_s);
  c.usd_per_hz = kv.get_double("capacity.usd_per_hz", c.usd_per_hz);

  c.carbon_tax_usd_per_ton = kv.get_double("economics.carbon_tax_usd_per_ton", c.carbon_tax_usd_per_ton);
  c.carbon_gamma = kv.get_double("economics.gamma", c.carbon_gamma);
  c.device_cost_case_a_usd = kv.get_double("economics.device_cost_case_a_usd", c.device_cost_case_a_usd);
  c.device_cost_case_b_usd = kv.get_double("economics.device_cost_case_b_usd", c.device_cost_case_b_usd);

  c.trials = kv.get_int("campaign.trials", c.trials);
  c.campaign_sweep = kv.get_int_list("campaign.sweep", {});
  const auto seed = kv.get_int("run.seed", static_cast<std::int64_t>(c.seed));
  if (seed < 0) throw ValidationError("config: run.seed must be >= 0");
  c.seed = static_cast<std::uint64_t>(seed);

  if (const auto unused = kv.unused_keys(); !unused.empty()) {
    throw ValidationError("config: unknown key " + unused.front());
  }

  c.fire.validate();
  c.satellite.validate();
  c.device.validate();
  c.timing.validate();
  c.exception_traffic.validate();
  c.periodic_traffic.validate();
  if (!(c.hours > 0.0)) throw ValidationError("config: plan.hours must be positive");
  if (c.budget < 0) throw ValidationError("config: plan.budget must be >= 0");
  if (!(c.cell_area_km2 > 0.0)) throw ValidationError("config: grid.cell_area_km2 must be positive");
  if (c.trials < 1) throw ValidationError("config: campaign.trials must be >= 1");
  if (!(c.usd_per_hz >= 0.0) || !(c.carbon_tax_usd_per_ton >= 0.0) || !(c.carbon_gamma >= 0.0) ||
      !(c.device_cost_case_a_usd >= 0.0) || !(c.device_cost_case_b_usd >= 0.0)) {
    throw ValidationError("config: prices and costs must be non-negative");
  }
  for (const auto k : c.plan_sweep) {
    if (k < 0) throw ValidationError("config: plan.sweep entries must be >= 0");
  }
  for (const auto k : c.campaign_sweep) {
    if (k < 0) throw ValidationError("config: campaign.sweep entries must be >= 0");
  }
  for (const auto& p : {c.regions_csv, c.fires_csv, c.mcs_csv}) {
    if (p && !std::filesystem::exists(*p)) throw ValidationError("config: file not found: " + p->string());
  }
  return c;
}

RunConfig RunConfig::load(const std::filesystem::path& path) { return from(KeyValueConfig::load(path)); }

}  // namespace firelink::config
