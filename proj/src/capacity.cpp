#include "firelink/capacity.hpp"

#include <cmath>
#include <string>

#include "firelink/errors.hpp"

namespace firelink::capacity {

void TrafficModel::validate() const {
  if (payload_bytes < 20 || payload_bytes > 200) throw ValidationError("traffic: payload must lie in [20, 200] bytes");
  if (!(reference_period_s > 0.0)) throw ValidationError("traffic: reference period must be positive");
  if (!(sessions_coefficient >= 0.0)) throw ValidationError("traffic: sessions coefficient must be >= 0");
}

void RadioTiming::validate() const {
  if (!(rtt_ms >= 0.0)) throw ValidationError("timing: rtt must be >= 0");
  if (!(ru_time_ms > 0.0) || !(ru_bw_khz > 0.0) || !(carrier_bw_khz > 0.0)) {
    throw ValidationError("timing: RU duration and bandwidths must be positive");
  }
  if (rus_per_report <= 0) throw ValidationError("timing: RUs per report must be positive");
  if (retransmission_factor <= 0) throw ValidationError("timing: retransmission factor must be positive");
  const double ratio = carrier_bw_khz / ru_bw_khz;
  if (std::abs(ratio - std::round(ratio)) > 1e-9 || std::round(ratio) < 1.0) {
    throw ValidationError("timing: carrier bandwidth must be a whole number of RU bandwidths");
  }
}

std::int64_t RadioTiming::subcarriers() const { return std::llround(carrier_bw_khz / ru_bw_khz); }

RadioTiming timing_for(SizingCase sizing, const link::McsTable& table, RadioTiming base) {
  const int level = sizing == SizingCase::Worst ? 5 : 11;
  const auto entry = table.by_level(level);
  if (!entry) throw ValidationError("MCS table lacks level " + std::to_string(level));
  base.rus_per_report = entry->ru_per_20_bytes;
  return base;
}

double report_duration_ms(const RadioTiming& t) {
  t.validate();
  return t.retransmission_factor * (2.0 * t.rtt_ms + t.rus_per_report * t.ru_time_ms);
}

std::int64_t devices_per_carrier_exception(const RadioTiming& t, double period_s) {
  if (!(period_s > 0.0)) throw ValidationError("period must be positive");
  const auto slots = static_cast<std::int64_t>(std::floor(period_s * 1000.0 / report_duration_ms(t)));
  return slots * t.subcarriers();
}

namespace {

void require_kind(const TrafficModel& model, TrafficKind kind, const char* op) {
  model.validate();
  if (model.kind != kind) {
    throw ValidationError(std::string(op) + ": traffic model is " +
                          (model.kind == TrafficKind::Exception ? "exception" : "periodic"));
  }
}

}  // namespace

double periodic_sessions(std::int64_t sensors, double observation_s, const TrafficModel& model) {
  require_kind(model, TrafficKind::Periodic, "periodic_sessions");
  if (sensors < 0 || !(observation_s >= 0.0)) throw ValidationError("periodic_sessions: negative input");
  return model.sessions_coefficient * static_cast<double>(sensors) * (observation_s / 86400.0);
}

std::int64_t periodic_total_bytes(std::int64_t sensors, double observation_s, const TrafficModel& model) {
  return std::llround(periodic_sessions(sensors, observation_s, model)) * model.payload_bytes;
}

std::int64_t exception_total_bytes(std::int64_t sensors, const TrafficModel& model) {
  require_kind(model, TrafficKind::Exception, "exception_total_bytes");
  if (sensors < 0) throw ValidationError("exception_total_bytes: negative sensor count");
  return sensors * model.payload_bytes;
}

std::int64_t carriers_required(std::int64_t sensors, const RadioTiming& t, const TrafficModel& model) {
  require_kind(model, TrafficKind::Exception, "bandwidth_required_hz");
  if (sensors < 0) throw ValidationError("bandwidth_required_hz: negative sensor count");
  const std::int64_t per_carrier = devices_per_carrier_exception(t, model.reference_period_s);
  if (per_carrier <= 0) {
    throw ValidationError("no device can complete a report within the reference period");
  }
  return (sensors + per_carrier - 1) / per_carrier;
}

double bandwidth_required_hz(std::int64_t sensors, const RadioTiming& t, const TrafficModel& model) {
  return static_cast<double>(carriers_required(sensors, t, model)) * t.carrier_bw_khz * 1000.0;
}

double spectrum_cost_usd(double bandwidth_hz, double usd_per_hz) {
  if (!(bandwidth_hz >= 0.0) || !(usd_per_hz >= 0.0)) throw ValidationError("spectrum cost: negative input");
  return bandwidth_hz * usd_per_hz;
}

PeriodicCapacity devices_per_carrier_periodic(const RadioTiming& t, const TrafficModel& model, double period_s,
                                              std::int64_t cap) {
  require_kind(model, TrafficKind::Periodic, "devices_per_carrier_periodic");
  const auto slots = static_cast<double>(devices_per_carrier_exception(t, period_s));
  const double sessions_per_device = model.sessions_coefficient * period_s / 86400.0;
  if (sessions_per_device <= 0.0) return {cap, true};
  const double devices = std::floor(slots / sessions_per_device);
  if (devices >= static_cast<double>(cap)) return {cap, true};
  return {static_cast<std::int64_t>(devices), false};
}

}  // namespace firelink::capacity
