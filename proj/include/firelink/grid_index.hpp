#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "firelink/fire_model.hpp"

namespace firelink::grid {

/// Planar coordinates in km.
struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;
};

struct Cell {
  std::int64_t row = 0;
  std::int64_t col = 0;
};

/// Square-cell lattice recovered from region centres.
///
/// Centres are projected equirectangularly about their mean latitude and
/// longitude; the cell side is sqrt(A). Construction fails with
/// ValidationError when the projected centres do not sit on that lattice.
class GridIndex {
 public:
  explicit GridIndex(const fire::RegionGrid& grid);

  double side_km() const { return side_; }
  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }

  PlanarPoint project(const geo::GeoPoint& p) const;
  PlanarPoint center(std::size_t region) const { return centers_[region]; }
  Cell cell_of(std::size_t region) const { return cells_[region]; }
  /// Lower-left corner of the region's square.
  PlanarPoint corner(std::size_t region) const;

  std::optional<std::size_t> region_at(Cell cell) const;
  std::optional<std::size_t> locate(PlanarPoint p) const;

  /// Regions whose closed square lies within `radius` of `c`.
  std::vector<std::size_t> regions_within(PlanarPoint c, double radius) const;

 private:
  Cell cell_containing(PlanarPoint p) const;

  double side_ = 0.0;
  double ref_lat_ = 0.0;
  double ref_lon_ = 0.0;
  double cos_ref_ = 1.0;
  double origin_x_ = 0.0;  // lower-left corner of cell (0, 0)
  double origin_y_ = 0.0;
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<PlanarPoint> centers_;
  std::vector<Cell> cells_;
  std::unordered_map<std::int64_t, std::size_t> lookup_;
};

}  // namespace firelink::grid
