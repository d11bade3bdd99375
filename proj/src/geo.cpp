#include "firelink/geo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "firelink/errors.hpp"

namespace firelink::geo {

double normalize_lon(double lon_deg) {
  double wrapped = std::fmod(lon_deg + 180.0, 360.0);
  if (wrapped < 0.0) wrapped += 360.0;
  return wrapped - 180.0;
}

GeoPoint GeoPoint::make(double lat_deg, double lon_deg) {
  if (!std::isfinite(lat_deg) || !std::isfinite(lon_deg)) {
    throw ValidationError("coordinate is not finite");
  }
  if (lat_deg < -90.0 || lat_deg > 90.0) {
    throw ValidationError("latitude out of range: " + std::to_string(lat_deg));
  }
  return GeoPoint{lat_deg, normalize_lon(lon_deg)};
}

void SatelliteConfig::validate() const {
  if (!(altitude_km > 0.0)) throw ValidationError("satellite altitude must be positive");
  if (!(beam_radius_km > 0.0)) throw ValidationError("beam radius must be positive");
  if (!std::isfinite(sub_satellite_lon)) throw ValidationError("sub-satellite longitude is not finite");
}

double great_circle_km(const GeoPoint& a, const GeoPoint& b) {
  // Haversine form; well conditioned for the short baselines we care about.
  const double phi1 = deg2rad(a.lat);
  const double phi2 = deg2rad(b.lat);
  const double dphi = phi2 - phi1;
  const double dlambda = deg2rad(b.lon - a.lon);
  const double s1 = std::sin(dphi / 2.0);
  const double s2 = std::sin(dlambda / 2.0);
  const double h = std::clamp(s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2, 0.0, 1.0);
  return 2.0 * kEarthRadiusKm * std::asin(std::sqrt(h));
}

namespace {

double cos_geocentric(const GeoPoint& p, const SatelliteConfig& sat) {
  return std::clamp(std::cos(deg2rad(p.lat)) * std::cos(deg2rad(p.lon - sat.sub_satellite_lon)), -1.0, 1.0);
}

}  // namespace

double geocentric_angle_deg(const GeoPoint& p, const SatelliteConfig& sat) {
  return rad2deg(std::acos(cos_geocentric(p, sat)));
}

double slant_range_km(const GeoPoint& p, const SatelliteConfig& sat) {
  const double r = kEarthRadiusKm;
  const double orbit = r + sat.altitude_km;
  const double c = cos_geocentric(p, sat);
  return std::sqrt(std::max(0.0, r * r + orbit * orbit - 2.0 * r * orbit * c));
}

double elevation_deg(const GeoPoint& p, const SatelliteConfig& sat) {
  const double c = cos_geocentric(p, sat);
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  const double ratio = kEarthRadiusKm / (kEarthRadiusKm + sat.altitude_km);
  // atan((cos psi - R/(R+h)) / sin psi) with sin psi > 0.
  const double theta = s == 0.0 ? (c > 0.0 ? 90.0 : -90.0) : rad2deg(std::atan2(c - ratio, s));
  if (theta < 0.0) {
    throw UnservableError("satellite below horizon at (" + std::to_string(p.lat) + ", " +
                          std::to_string(p.lon) + ")");
  }
  return theta;
}

}  // namespace firelink::geo
