#include "firelink/mcs_table.hpp"

#include <algorithm>
#include <string>

#include "firelink/csv.hpp"
#include "firelink/errors.hpp"

namespace firelink::link {

McsTable::McsTable(std::vector<McsEntry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("MCS table is empty");
  std::sort(entries_.begin(), entries_.end(),
            [](const McsEntry& a, const McsEntry& b) { return a.min_snr_db < b.min_snr_db; });
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].ru_per_20_bytes <= 0) {
      throw ValidationError("MCS table: RU count must be positive for level " + std::to_string(entries_[i].mcs_level));
    }
    if (i == 0) continue;
    if (!(entries_[i].min_snr_db > entries_[i - 1].min_snr_db)) {
      throw ValidationError("MCS table: duplicate SNR threshold");
    }
    if (!(entries_[i].mcs_level > entries_[i - 1].mcs_level)) {
      throw ValidationError("MCS table: levels must increase with SNR");
    }
  }
}

McsTable McsTable::nb_iot_default() {
  static constexpr int kRus[] = {8, 5, 4, 3, 3, 3, 2, 2, 2, 2, 2, 1, 1, 1};
  std::vector<McsEntry> entries;
  for (int level = 0; level < 14; ++level) {
    entries.push_back({static_cast<double>(level) - 6.0, level, kRus[level]});
  }
  return McsTable(std::move(entries));
}

McsTable McsTable::load_csv(const std::filesystem::path& path) {
  const auto table = csv::read(path);
  const auto c_snr = table.column("min_snr_db");
  const auto c_mcs = table.column("mcs_level");
  const auto c_ru = table.column("ru_per_20_bytes");
  std::vector<McsEntry> entries;
  for (const auto& row : table.rows) {
    entries.push_back({csv::to_double(row.fields[c_snr], "min_snr_db", row.line),
                       static_cast<int>(csv::to_int(row.fields[c_mcs], "mcs_level", row.line)),
                       static_cast<int>(csv::to_int(row.fields[c_ru], "ru_per_20_bytes", row.line))});
  }
  return McsTable(std::move(entries));
}

void McsTable::save_csv(const std::filesystem::path& path) const {
  std::vector<std::vector<std::string>> rows;
  for (const auto& e : entries_) {
    rows.push_back({csv::format(e.min_snr_db), std::to_string(e.mcs_level), std::to_string(e.ru_per_20_bytes)});
  }
  csv::write(path, {"min_snr_db", "mcs_level", "ru_per_20_bytes"}, rows);
}

std::optional<McsEntry> McsTable::lookup(double snr_db) const {
  std::optional<McsEntry> found;
  for (const auto& e : entries_) {
    if (e.min_snr_db <= snr_db) found = e;
  }
  return found;
}

std::optional<McsEntry> McsTable::by_level(int mcs_level) const {
  for (const auto& e : entries_) {
    if (e.mcs_level == mcs_level) return e;
  }
  return std::nullopt;
}

}  // namespace firelink::link
