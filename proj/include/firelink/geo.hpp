#pragma once

#include "firelink/units.hpp"

namespace firelink::geo {

inline constexpr double kEarthRadiusKm = 6371.0;
inline constexpr double kGeoAltitudeKm = 35786.0;

/// Geographic coordinate in degrees. Construct through `make` to get a
/// validated point with longitude wrapped into [-180, 180).
struct GeoPoint {
  double lat = 0.0;
  double lon = 0.0;

  /// Throws ValidationError when |lat| > 90 or either value is not finite.
  static GeoPoint make(double lat_deg, double lon_deg);

  friend bool operator==(const GeoPoint&, const GeoPoint&) = default;
};

/// Wraps any finite longitude into [-180, 180).
double normalize_lon(double lon_deg);

struct SatelliteConfig {
  double sub_satellite_lon = 0.0;
  double altitude_km = kGeoAltitudeKm;
  GeoPoint beam_center{};
  double beam_radius_km = 1000.0;
  double g_s_max_dbi = 25.0;

  void validate() const;
};

/// Great-circle distance on a sphere of radius kEarthRadiusKm.
double great_circle_km(const GeoPoint& a, const GeoPoint& b);

/// Geocentric angle (degrees) between `p` and the sub-satellite point.
double geocentric_angle_deg(const GeoPoint& p, const SatelliteConfig& sat);

/// Straight-line distance from a ground point to the satellite.
double slant_range_km(const GeoPoint& p, const SatelliteConfig& sat);

/// Elevation angle of the satellite seen from `p`, in degrees.
/// Throws UnservableError when the satellite is below the horizon.
double elevation_deg(const GeoPoint& p, const SatelliteConfig& sat);

}  // namespace firelink::geo
