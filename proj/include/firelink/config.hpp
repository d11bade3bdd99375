#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "firelink/campaign.hpp"
#include "firelink/capacity.hpp"
#include "firelink/fire_model.hpp"
#include "firelink/geo.hpp"
#include "firelink/link_budget.hpp"

namespace firelink::config {

/// Flat `section.key = value` file. `#` starts a comment line. Relative
/// paths resolve against the file's directory.
class KeyValueConfig {
 public:
  static KeyValueConfig load(const std::filesystem::path& path);
  static KeyValueConfig parse(std::string_view text, std::filesystem::path base_dir = {});

  bool contains(const std::string& key) const { return values_.contains(key); }
  std::optional<std::string> get(const std::string& key) const;

  double get_double(const std::string& key, double fallback) const;
  double require_double(const std::string& key) const;
  std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::optional<std::filesystem::path> get_path(const std::string& key) const;
  std::vector<std::int64_t> get_int_list(const std::string& key, std::vector<std::int64_t> fallback) const;
  std::vector<std::string> get_string_list(const std::string& key) const;

  /// Keys never read; a non-empty result usually means a typo.
  std::vector<std::string> unused_keys() const;

 private:
  struct Entry {
    std::string value;
    std::size_t line = 0;
  };
  std::map<std::string, Entry> values_;
  std::filesystem::path base_dir_;
  mutable std::set<std::string> used_;
};

struct LinkSite {
  std::string name;
  geo::GeoPoint location{};
  double off_boresight_deg = 50.0;
  std::optional<double> reference_snr_db;
};

struct RunConfig {
  std::optional<std::filesystem::path> regions_csv;
  std::optional<std::filesystem::path> fires_csv;
  std::optional<std::filesystem::path> mcs_csv;
  double cell_area_km2 = 100.0;

  fire::FireModelParams fire{};
  double hours = 4.0;
  std::int64_t budget = 100'000;
  std::vector<std::int64_t> plan_sweep;

  geo::SatelliteConfig satellite{};
  link::DeviceConfig device{};
  std::vector<LinkSite> link_sites;

  capacity::RadioTiming timing{};
  capacity::TrafficModel exception_traffic = capacity::TrafficModel::exception();
  capacity::TrafficModel periodic_traffic = capacity::TrafficModel::periodic();
  capacity::SizingCase sizing = capacity::SizingCase::Worst;
  double observation_s = 10.0;
  double usd_per_hz = 0.6;

  double carbon_tax_usd_per_ton = 20.0;
  double carbon_gamma = 10.0;
  double device_cost_case_a_usd = 10.0;
  double device_cost_case_b_usd = 100.0;

  std::int64_t trials = 20;
  std::vector<std::int64_t> campaign_sweep;
  std::uint64_t seed = 2020;

  double carbon_price_usd_per_ton() const { return carbon_tax_usd_per_ton * carbon_gamma; }

  /// Reads every known key, validates, and rejects unknown keys.
  static RunConfig from(const KeyValueConfig& kv);
  static RunConfig load(const std::filesystem::path& path);
};

}  // namespace firelink::config
