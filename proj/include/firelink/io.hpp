#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "firelink/campaign.hpp"
#include "firelink/fading.hpp"
#include "firelink/fire_model.hpp"
#include "firelink/link_budget.hpp"
#include "firelink/placement.hpp"

namespace firelink::io {

/// Region CSV: id,lat,lon,biomass,soil_moisture,lightning,p_human,spread_rate.
/// Rows may come in any order; ids must be unique and cover 0..N-1. Errors
/// carry the file name and line number.
fire::RegionGrid load_regions(const std::filesystem::path& path, double cell_area_km2);
void save_regions(const std::filesystem::path& path, const fire::RegionGrid& grid);

/// Placement CSV: region_id,n_sensors. The budget is not stored; when absent
/// it defaults to the number of sensors placed.
std::string render_placement_csv(const placement::Placement& placement);
void save_placement_csv(const std::filesystem::path& path, const placement::Placement& placement);
placement::Placement load_placement_csv(const std::filesystem::path& path, std::size_t regions,
                                        std::optional<std::int64_t> budget = std::nullopt);

/// Per-fire campaign table.
std::string render_fire_table(const campaign::CampaignResult& result);
void save_fire_table(const std::filesystem::path& path, const campaign::CampaignResult& result);
std::vector<campaign::FireSummary> load_fire_table(const std::filesystem::path& path);

/// Pretty-printed with a trailing newline; keys are sorted so output is stable.
void write_json(const std::filesystem::path& path, const nlohmann::json& doc);
nlohmann::json read_json(const std::filesystem::path& path);

}  // namespace firelink::io

namespace firelink::placement {
void to_json(nlohmann::json& j, const Placement& p);
void from_json(const nlohmann::json& j, Placement& p);
}  // namespace firelink::placement

namespace firelink::link {
void to_json(nlohmann::json& j, const LinkResult& r);
void from_json(const nlohmann::json& j, LinkResult& r);
void to_json(nlohmann::json& j, const FadingParams& p);
void from_json(const nlohmann::json& j, FadingParams& p);
}  // namespace firelink::link

namespace firelink::campaign {
void to_json(nlohmann::json& j, const FireSummary& s);
void from_json(const nlohmann::json& j, FireSummary& s);
void to_json(nlohmann::json& j, const CampaignResult& r);
void from_json(const nlohmann::json& j, CampaignResult& r);
}  // namespace firelink::campaign
