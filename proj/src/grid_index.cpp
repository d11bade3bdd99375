#include "firelink/grid_index.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "firelink/errors.hpp"

namespace firelink::grid {

namespace {

std::int64_t key(Cell c) { return (c.row << 32) ^ (c.col & 0xffffffff); }

}  // namespace

GridIndex::GridIndex(const fire::RegionGrid& grid) {
  if (grid.regions.empty()) throw ValidationError("grid index: no regions");
  if (!(grid.cell_area_km2 > 0.0)) throw ValidationError("grid index: cell area must be positive");
  side_ = std::sqrt(grid.cell_area_km2);

  double lat_sum = 0.0;
  double lon_sum = 0.0;
  for (const auto& r : grid.regions) {
    lat_sum += r.center.lat;
    lon_sum += r.center.lon;
  }
  const auto n = static_cast<double>(grid.regions.size());
  ref_lat_ = lat_sum / n;
  ref_lon_ = lon_sum / n;
  cos_ref_ = std::cos(deg2rad(ref_lat_));

  centers_.reserve(grid.regions.size());
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  for (const auto& r : grid.regions) {
    centers_.push_back(project(r.center));
    min_x = std::min(min_x, centers_.back().x);
    min_y = std::min(min_y, centers_.back().y);
  }
  origin_x_ = min_x - side_ / 2.0;
  origin_y_ = min_y - side_ / 2.0;

  cells_.reserve(centers_.size());
  for (std::size_t i = 0; i < centers_.size(); ++i) {
    const double fx = (centers_[i].x - min_x) / side_;
    const double fy = (centers_[i].y - min_y) / side_;
    const Cell cell{std::llround(fy), std::llround(fx)};
    if (std::abs(fx - static_cast<double>(cell.col)) > 1e-3 || std::abs(fy - static_cast<double>(cell.row)) > 1e-3) {
      throw ValidationError("grid index: region " + std::to_string(i) + " is off the " + std::to_string(side_) +
                            " km lattice");
    }
    if (!lookup_.emplace(key(cell), i).second) {
      throw ValidationError("grid index: regions " + std::to_string(lookup_.at(key(cell))) + " and " +
                            std::to_string(i) + " share a cell");
    }
    cells_.push_back(cell);
    rows_ = std::max(rows_, cell.row + 1);
    cols_ = std::max(cols_, cell.col + 1);
  }
}

PlanarPoint GridIndex::project(const geo::GeoPoint& p) const {
  return {geo::kEarthRadiusKm * deg2rad(p.lon - ref_lon_) * cos_ref_, geo::kEarthRadiusKm * deg2rad(p.lat - ref_lat_)};
}

PlanarPoint GridIndex::corner(std::size_t region) const {
  const Cell c = cells_[region];
  return {origin_x_ + static_cast<double>(c.col) * side_, origin_y_ + static_cast<double>(c.row) * side_};
}

std::optional<std::size_t> GridIndex::region_at(Cell cell) const {
  const auto it = lookup_.find(key(cell));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

Cell GridIndex::cell_containing(PlanarPoint p) const {
  return {static_cast<std::int64_t>(std::floor((p.y - origin_y_) / side_)),
          static_cast<std::int64_t>(std::floor((p.x - origin_x_) / side_))};
}

std::optional<std::size_t> GridIndex::locate(PlanarPoint p) const { return region_at(cell_containing(p)); }

std::vector<std::size_t> GridIndex::regions_within(PlanarPoint c, double radius) const {
  std::vector<std::size_t> out;
  const Cell lo = cell_containing({c.x - radius, c.y - radius});
  const Cell hi = cell_containing({c.x + radius, c.y + radius});
  for (std::int64_t row = lo.row; row <= hi.row; ++row) {
    for (std::int64_t col = lo.col; col <= hi.col; ++col) {
      const auto region = region_at({row, col});
      if (!region) continue;
      const double x0 = origin_x_ + static_cast<double>(col) * side_;
      const double y0 = origin_y_ + static_cast<double>(row) * side_;
      const double dx = std::max({x0 - c.x, 0.0, c.x - (x0 + side_)});
      const double dy = std::max({y0 - c.y, 0.0, c.y - (y0 + side_)});
      if (dx * dx + dy * dy <= radius * radius) out.push_back(*region);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace firelink::grid
