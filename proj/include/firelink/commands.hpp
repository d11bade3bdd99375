#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "firelink/config.hpp"
#include "firelink/link_budget.hpp"

namespace firelink::cli {

enum class Scheme { Optimized, Uniform, Both };
Scheme parse_scheme(std::string_view text);

struct CommandOptions {
  std::filesystem::path out_dir = "out";
  std::optional<std::uint64_t> seed;
  Scheme scheme = Scheme::Both;
  link::BeamMode mode = link::BeamMode::Linear;
  std::optional<geo::GeoPoint> location;  // linkbudget: overrides configured sites
};

/// Files produced by a command, written only once the computation is done.
class OutputSet {
 public:
  void add(std::string name, std::string content);
  void add_json(std::string name, const nlohmann::json& doc);
  /// Creates `dir` if needed and writes every file.
  void commit(const std::filesystem::path& dir) const;
  const std::vector<std::pair<std::string, std::string>>& files() const { return files_; }

 private:
  std::vector<std::pair<std::string, std::string>> files_;
};

/// Each command returns the summary document it also writes to disk.
nlohmann::json run_plan(const config::RunConfig& cfg, const CommandOptions& opts);
nlohmann::json run_linkbudget(const config::RunConfig& cfg, const CommandOptions& opts);
nlohmann::json run_capacity(const config::RunConfig& cfg, const CommandOptions& opts);
nlohmann::json run_simulate(const config::RunConfig& cfg, const CommandOptions& opts);
nlohmann::json run_report(const CommandOptions& opts);

/// Exit codes: 0 success, 2 validation, 3 numeric failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumeric = 3;

}  // namespace firelink::cli
