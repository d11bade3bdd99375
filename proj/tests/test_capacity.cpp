#include <cmath>

#include "doctest.h"
#include "firelink/capacity.hpp"
#include "firelink/errors.hpp"

using namespace firelink;

TEST_CASE("report timing and per-carrier capacity") {
  const auto table = link::McsTable::nb_iot_default();
  const auto worst = capacity::timing_for(capacity::SizingCase::Worst, table);
  const auto best = capacity::timing_for(capacity::SizingCase::Best, table);
  CHECK(worst.rus_per_report == 3);
  CHECK(best.rus_per_report == 1);
  CHECK(worst.subcarriers() == 48);
  CHECK(capacity::report_duration_ms(worst) == 2 * 500.0 + 3 * 32.0);
  CHECK(capacity::report_duration_ms(best) == 2 * 500.0 + 32.0);
  CHECK(capacity::devices_per_carrier_exception(worst, 10.0) == (10000 / 1096) * 48);
  CHECK(capacity::devices_per_carrier_exception(best, 10.0) == (10000 / 1032) * 48);

  auto retx = worst;
  retx.retransmission_factor = 2;
  CHECK(capacity::report_duration_ms(retx) == 2 * 1096.0);
  CHECK(capacity::devices_per_carrier_exception(retx, 10.0) == 4 * 48);
}

TEST_CASE("bandwidth sizing rounds carriers up") {
  const auto t = capacity::timing_for(capacity::SizingCase::Worst, link::McsTable::nb_iot_default());
  const auto traffic = capacity::TrafficModel::exception();
  CHECK(capacity::carriers_required(0, t, traffic) == 0);
  CHECK(capacity::bandwidth_required_hz(0, t, traffic) == 0.0);
  CHECK(capacity::bandwidth_required_hz(1, t, traffic) == 180e3);
  CHECK(capacity::carriers_required(432, t, traffic) == 1);
  CHECK(capacity::carriers_required(433, t, traffic) == 2);
  CHECK(capacity::carriers_required(100'000, t, traffic) == (100'000 + 431) / 432);
  CHECK(capacity::spectrum_cost_usd(1e6, 0.6) == doctest::Approx(6e5));
  CHECK_THROWS_AS(capacity::bandwidth_required_hz(-1, t, traffic), ValidationError);
  CHECK_THROWS_AS(capacity::bandwidth_required_hz(10, t, capacity::TrafficModel::periodic()), ValidationError);

  capacity::RadioTiming slow = t;
  slow.rtt_ms = 6000.0;  // one report no longer fits in the 10 s period
  CHECK(capacity::devices_per_carrier_exception(slow, 10.0) == 0);
  CHECK_THROWS_AS(capacity::bandwidth_required_hz(10, slow, traffic), ValidationError);
}

TEST_CASE("traffic volumes") {
  const auto periodic = capacity::TrafficModel::periodic();
  CHECK(capacity::periodic_sessions(86400, 1.0, periodic) == doctest::Approx(11.2));
  CHECK(capacity::periodic_total_bytes(1'000'000, 10.0, periodic) == 1296 * 20);
  CHECK(capacity::exception_total_bytes(1'000'000, capacity::TrafficModel::exception()) == 20'000'000);
  CHECK_THROWS_AS(capacity::periodic_sessions(10, 10.0, capacity::TrafficModel::exception()), ValidationError);
}

TEST_CASE("periodic devices per carrier") {
  const auto t = capacity::timing_for(capacity::SizingCase::Worst, link::McsTable::nb_iot_default());
  const auto periodic = capacity::TrafficModel::periodic();
  const auto result = capacity::devices_per_carrier_periodic(t, periodic, 10.0);
  // Independent arithmetic: 432 slots, each device uses 11.2 * 10 / 86400 of a slot.
  CHECK(result.devices == static_cast<std::int64_t>(std::floor(432.0 / (11.2 * 10.0 / 86400.0))));
  CHECK_FALSE(result.overflow);
  const auto capped = capacity::devices_per_carrier_periodic(t, periodic, 10.0, 1000);
  CHECK(capped.overflow);
  CHECK(capped.devices == 1000);
  auto idle = periodic;
  idle.sessions_coefficient = 0.0;
  CHECK(capacity::devices_per_carrier_periodic(t, idle, 10.0).overflow);
}

TEST_CASE("timing and traffic validation") {
  capacity::RadioTiming t;
  CHECK_NOTHROW(t.validate());
  t.ru_bw_khz = 200.0;
  CHECK_THROWS_AS(t.validate(), ValidationError);
  t = {};
  t.retransmission_factor = 0;
  CHECK_THROWS_AS(t.validate(), ValidationError);
  t = {};
  t.rus_per_report = 0;
  CHECK_THROWS_AS(t.validate(), ValidationError);
  auto traffic = capacity::TrafficModel::exception();
  traffic.payload_bytes = 0;
  CHECK_THROWS_AS(traffic.validate(), ValidationError);
  traffic = capacity::TrafficModel::exception();
  traffic.reference_period_s = 0.0;
  CHECK_THROWS_AS(traffic.validate(), ValidationError);
}
