#pragma once

#include <string_view>

#include "firelink/geo.hpp"
#include "firelink/mcs_table.hpp"

namespace firelink::link {

struct DeviceConfig {
  double tx_power_dbm = 23.0;
  double g_t_max_dbi = 7.38;
  double off_boresight_deg = 50.0;
  double carrier_hz = 2e9;
  double noise_power_dbm = -167.42;
  double other_losses_db = -10.0;  // negative = loss

  void validate() const;
};

/// How the satellite beam rolloff enters the beam gain.
///  - Linear: G_s,max[dBi] + 10 log10(factor), i.e. the factor scales linear gain.
///  - DbScaled: G_s,max[dBi] * factor, the factor multiplies the dB figure.
enum class BeamMode { Linear, DbScaled };

std::string_view to_string(BeamMode mode);
/// Accepts "linear" and "db-scaled"; throws ValidationError otherwise.
BeamMode parse_beam_mode(std::string_view text);

/// GEO satellite at 125W with a 1000 km beam centred on (37N, 122W).
geo::SatelliteConfig reference_satellite();

/// Terrestrial antenna gain mask (dBi) versus off-boresight angle in degrees.
double antenna_gain_dbi(double off_boresight_deg, double g_t_max_dbi);

/// (J1(u)/(2u) + 36 J3(u)/u^3)^2 with u = 2.07123 d / r; 1 at boresight.
double beam_rolloff_factor(double distance_km, double beam_radius_km);

/// Free-space path loss as a positive dB figure.
double fspl_db(double distance_km, double carrier_hz);

struct LinkResult {
  BeamMode mode = BeamMode::Linear;
  double distance_to_beam_center_km = 0.0;
  double slant_range_km = 0.0;
  double elevation_deg = 0.0;
  double rolloff_factor = 1.0;

  double tx_power_dbm = 0.0;
  double antenna_gain_dbi = 0.0;
  double beam_gain_dbi = 0.0;
  double fspl_db = 0.0;
  double other_losses_db = 0.0;
  double noise_power_dbm = 0.0;
  double snr_db = 0.0;
  int mcs_level = -1;  // -1 when the SNR is below the MCS table

  /// tx + antenna + beam - fspl + other - noise.
  double recomposed_snr_db() const;
};

/// Deterministic uplink SNR (small-scale fading power fixed to 1).
/// Throws UnservableError when the satellite is below the horizon.
LinkResult snr_db(const DeviceConfig& device, const geo::SatelliteConfig& sat, const geo::GeoPoint& location,
                  BeamMode mode = BeamMode::Linear, const McsTable& table = McsTable::nb_iot_default());

}  // namespace firelink::link
