#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <unistd.h>

#include "firelink/fire_model.hpp"
#include "firelink/geo.hpp"

namespace testing {

inline std::filesystem::path data_dir() { return FIRELINK_DATA_DIR; }

/// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("firelink_" + tag + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// rows x cols lattice of square cells centred on (lat0, lon0), built with the
/// inverse of the equirectangular projection. Fields are filled by `fill`.
template <class Fill>
firelink::fire::RegionGrid lattice(int rows, int cols, double side_km, double lat0, double lon0, Fill fill) {
  constexpr double kR = firelink::geo::kEarthRadiusKm;
  const double deg = 180.0 / std::acos(-1.0);
  firelink::fire::RegionGrid grid;
  grid.cell_area_km2 = side_km * side_km;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const double x = (c + 0.5) * side_km - cols * side_km / 2.0;
      const double y = (r + 0.5) * side_km - rows * side_km / 2.0;
      firelink::fire::RegionEnv env;
      env.id = static_cast<std::int64_t>(grid.regions.size());
      env.center = firelink::geo::GeoPoint::make(lat0 + deg * y / kR, lon0 + deg * x / (kR * std::cos(lat0 / deg)));
      env.biomass = 1.0;
      env.soil_moisture = 0.1;
      env.lightning = 0.3;
      env.p_human = 0.5;
      env.spread_rate = 0.5;
      fill(env, r, c);
      grid.regions.push_back(env);
    }
  }
  return grid;
}

/// Inverse projection of planar km offsets about (lat0, lon0).
inline firelink::geo::GeoPoint unproject(double x, double y, double lat0, double lon0) {
  constexpr double kR = firelink::geo::kEarthRadiusKm;
  const double deg = 180.0 / std::acos(-1.0);
  return firelink::geo::GeoPoint::make(lat0 + deg * y / kR, lon0 + deg * x / (kR * std::cos(lat0 / deg)));
}

}  // namespace testing
