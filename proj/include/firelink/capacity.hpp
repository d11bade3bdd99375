#pragma once

#include <cstdint>

#include "firelink/mcs_table.hpp"

namespace firelink::capacity {

enum class TrafficKind { Exception, Periodic };

struct TrafficModel {
  TrafficKind kind = TrafficKind::Exception;
  int payload_bytes = 20;
  double reference_period_s = 10.0;
  double sessions_coefficient = 11.2;  // sessions per device per day (periodic only)

  static TrafficModel exception() { return {}; }
  static TrafficModel periodic() { return {TrafficKind::Periodic, 20, 10.0, 11.2}; }
  void validate() const;
};

struct RadioTiming {
  double rtt_ms = 500.0;
  double ru_time_ms = 32.0;
  double ru_bw_khz = 3.75;
  double carrier_bw_khz = 180.0;
  int rus_per_report = 3;
  int retransmission_factor = 1;  // 1 = no retransmissions

  void validate() const;
  /// Single-tone subcarriers per carrier (48 for NB-IoT).
  std::int64_t subcarriers() const;
};

/// Worst case: every device at MCS 5 (edge of beam). Best case: MCS 11.
enum class SizingCase { Worst, Best };

/// Copy of `base` with `rus_per_report` taken from the MCS table at the
/// level implied by `sizing`.
RadioTiming timing_for(SizingCase sizing, const link::McsTable& table, RadioTiming base = {});

/// Two round trips (random access, then data + ack) plus the RU airtime,
/// times the retransmission factor.
double report_duration_ms(const RadioTiming& t);

/// Full reports that fit in one period, times subcarriers per carrier.
std::int64_t devices_per_carrier_exception(const RadioTiming& t, double period_s);

/// S = coefficient * K * T_obs / 86400. Throws ValidationError for
/// non-periodic traffic.
double periodic_sessions(std::int64_t sensors, double observation_s, const TrafficModel& model);
/// round(S) * payload.
std::int64_t periodic_total_bytes(std::int64_t sensors, double observation_s, const TrafficModel& model);
/// Every sensor sends one payload.
std::int64_t exception_total_bytes(std::int64_t sensors, const TrafficModel& model);

/// ceil(K / devices_per_carrier) whole carriers, in Hz. Throws
/// ValidationError for periodic traffic or when a carrier supports no device.
double bandwidth_required_hz(std::int64_t sensors, const RadioTiming& t, const TrafficModel& model);
std::int64_t carriers_required(std::int64_t sensors, const RadioTiming& t, const TrafficModel& model);

double spectrum_cost_usd(double bandwidth_hz, double usd_per_hz);

struct PeriodicCapacity {
  std::int64_t devices = 0;
  bool overflow = false;  // rate was zero or the count exceeded the cap
};

/// Concurrent report slots per carrier divided by each device's sessions per
/// period, floored.
PeriodicCapacity devices_per_carrier_periodic(const RadioTiming& t, const TrafficModel& model, double period_s,
                                              std::int64_t cap = 1'000'000'000'000);

}  // namespace firelink::capacity
