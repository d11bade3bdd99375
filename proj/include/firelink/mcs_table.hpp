#pragma once

#include <filesystem>
#include <optional>
#include <vector>

namespace firelink::link {

struct McsEntry {
  double min_snr_db = 0.0;
  int mcs_level = 0;
  int ru_per_20_bytes = 1;  // resource units needed for one 20-byte report

  friend bool operator==(const McsEntry&, const McsEntry&) = default;
};

/// Monotone step table SNR -> MCS. Entry k applies to
/// min_snr_db[k] <= snr < min_snr_db[k+1].
class McsTable {
 public:
  /// Sorts by threshold and throws ValidationError unless thresholds and
  /// levels are both strictly increasing and RU counts are positive.
  explicit McsTable(std::vector<McsEntry> entries);

  /// Levels 0..13 in 1 dB steps starting at -6 dB, so -0.45 dB lands on MCS 5
  /// and 5.55 dB on MCS 11. RU counts follow the NB-IoT single-tone TBS table
  /// for a 160-bit payload (3 RUs at MCS 5). Intermediate thresholds are an
  /// assumption, not measured data.
  static McsTable nb_iot_default();

  /// CSV with header `min_snr_db,mcs_level,ru_per_20_bytes`.
  static McsTable load_csv(const std::filesystem::path& path);
  void save_csv(const std::filesystem::path& path) const;

  /// Highest entry whose threshold is <= snr, or nullopt below the table.
  std::optional<McsEntry> lookup(double snr_db) const;
  std::optional<McsEntry> by_level(int mcs_level) const;

  const std::vector<McsEntry>& entries() const { return entries_; }

 private:
  std::vector<McsEntry> entries_;
};

}  // namespace firelink::link
