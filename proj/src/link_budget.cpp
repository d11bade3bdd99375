#include "firelink/link_budget.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "firelink/bessel.hpp"
#include "firelink/errors.hpp"

namespace firelink::link {

void DeviceConfig::validate() const {
  if (!(carrier_hz > 0.0)) throw ValidationError("device: carrier frequency must be positive");
  if (!(off_boresight_deg > 0.0 && off_boresight_deg <= 180.0)) {
    throw ValidationError("device: off-boresight angle must lie in (0, 180]");
  }
}

std::string_view to_string(BeamMode mode) { return mode == BeamMode::Linear ? "linear" : "db-scaled"; }

BeamMode parse_beam_mode(std::string_view text) {
  if (text == "linear") return BeamMode::Linear;
  if (text == "db-scaled") return BeamMode::DbScaled;
  throw ValidationError("unknown beam mode '" + std::string(text) + "' (expected linear or db-scaled)");
}

geo::SatelliteConfig reference_satellite() {
  geo::SatelliteConfig sat;
  sat.sub_satellite_lon = -125.0;
  sat.altitude_km = geo::kGeoAltitudeKm;
  sat.beam_center = geo::GeoPoint::make(37.0, -122.0);
  sat.beam_radius_km = 1000.0;
  sat.g_s_max_dbi = 25.0;
  return sat;
}

double antenna_gain_dbi(double off_boresight_deg, double g_t_max_dbi) {
  if (!(off_boresight_deg > 0.0 && off_boresight_deg <= 180.0)) {
    throw ValidationError("off-boresight angle must lie in (0, 180], got " + std::to_string(off_boresight_deg));
  }
  if (off_boresight_deg <= 1.0) return g_t_max_dbi;
  if (off_boresight_deg <= 48.0) return 32.0 - 25.0 * std::log10(off_boresight_deg);
  return -10.0;
}

double beam_rolloff_factor(double distance_km, double beam_radius_km) {
  if (!(distance_km >= 0.0)) throw ValidationError("beam distance must be >= 0");
  if (!(beam_radius_km > 0.0)) throw ValidationError("beam radius must be positive");
  const double u = 2.07123 / beam_radius_km * distance_km;
  if (u < 1e-6) return 1.0;
  const double shape = special::bessel_j(1, u) / (2.0 * u) + 36.0 * special::bessel_j(3, u) / (u * u * u);
  return shape * shape;
}

double fspl_db(double distance_km, double carrier_hz) {
  if (!(distance_km > 0.0) || !(carrier_hz > 0.0)) throw ValidationError("fspl: distance and frequency must be positive");
  return 20.0 * std::log10(4.0 * kPi * carrier_hz * distance_km * 1000.0 / kSpeedOfLight);
}

double LinkResult::recomposed_snr_db() const {
  return tx_power_dbm + antenna_gain_dbi + beam_gain_dbi - fspl_db + other_losses_db - noise_power_dbm;
}

LinkResult snr_db(const DeviceConfig& device, const geo::SatelliteConfig& sat, const geo::GeoPoint& location,
                  BeamMode mode, const McsTable& table) {
  device.validate();
  sat.validate();
  LinkResult r;
  r.mode = mode;
  r.elevation_deg = geo::elevation_deg(location, sat);  // throws when unservable
  r.slant_range_km = geo::slant_range_km(location, sat);
  r.distance_to_beam_center_km = geo::great_circle_km(location, sat.beam_center);
  r.rolloff_factor = beam_rolloff_factor(r.distance_to_beam_center_km, sat.beam_radius_km);

  r.tx_power_dbm = device.tx_power_dbm;
  r.antenna_gain_dbi = antenna_gain_dbi(device.off_boresight_deg, device.g_t_max_dbi);
  if (mode == BeamMode::Linear) {
    r.beam_gain_dbi = r.rolloff_factor > 0.0 ? sat.g_s_max_dbi + 10.0 * std::log10(r.rolloff_factor)
                                             : -std::numeric_limits<double>::infinity();
  } else {
    r.beam_gain_dbi = sat.g_s_max_dbi * r.rolloff_factor;
  }
  r.fspl_db = fspl_db(r.slant_range_km, device.carrier_hz);
  r.other_losses_db = device.other_losses_db;
  r.noise_power_dbm = device.noise_power_dbm;
  r.snr_db = r.recomposed_snr_db();
  const auto entry = table.lookup(r.snr_db);
  r.mcs_level = entry ? entry->mcs_level : -1;
  return r;
}

}  // namespace firelink::link
