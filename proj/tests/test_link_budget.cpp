#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "firelink/errors.hpp"
#include "firelink/link_budget.hpp"
#include "support.hpp"

using namespace firelink;

namespace {

double oracle_rolloff(double d, double r) {
  const double u = 2.07123 * d / r;
  const double s = boost::math::cyl_bessel_j(1, u) / (2.0 * u) + 36.0 * boost::math::cyl_bessel_j(3, u) / (u * u * u);
  return s * s;
}

// FSPL from the linear path-loss ratio (c / (4 pi f D))^2.
double oracle_fspl(double d_km, double f_hz) {
  const long double ratio = 299792458.0L / (4.0L * 3.14159265358979323846L * f_hz * d_km * 1000.0L);
  return static_cast<double>(-10.0L * std::log10(ratio * ratio));
}

}  // namespace

TEST_CASE("device antenna mask") {
  CHECK(link::antenna_gain_dbi(0.5, 7.38) == 7.38);
  CHECK(link::antenna_gain_dbi(1.0, 7.38) == 7.38);
  CHECK(link::antenna_gain_dbi(10.0, 7.38) == doctest::Approx(7.0));
  CHECK(link::antenna_gain_dbi(48.0, 7.38) == doctest::Approx(32.0 - 25.0 * std::log10(48.0)));
  CHECK(link::antenna_gain_dbi(50.0, 7.38) == -10.0);
  CHECK(link::antenna_gain_dbi(180.0, 7.38) == -10.0);
  CHECK_THROWS_AS(link::antenna_gain_dbi(0.0, 7.38), ValidationError);
  CHECK_THROWS_AS(link::antenna_gain_dbi(180.5, 7.38), ValidationError);
}

TEST_CASE("beam rolloff factor") {
  CHECK(link::beam_rolloff_factor(0.0, 1000.0) == 1.0);
  for (double d = 1.0; d < 1500.0; d += 13.7) {
    CHECK(link::beam_rolloff_factor(d, 1000.0) == doctest::Approx(oracle_rolloff(d, 1000.0)).epsilon(1e-10));
  }
  // The beam radius is the -3 dB contour.
  CHECK(10.0 * std::log10(link::beam_rolloff_factor(1000.0, 1000.0)) == doctest::Approx(-3.0).epsilon(0.02));
  double previous = 1.0;
  for (double d = 0.0; d <= 1000.0; d += 5.0) {
    const double f = link::beam_rolloff_factor(d, 1000.0);
    CHECK(f <= previous + 1e-15);
    previous = f;
  }
  CHECK_THROWS_AS(link::beam_rolloff_factor(-1.0, 1000.0), ValidationError);
  CHECK_THROWS_AS(link::beam_rolloff_factor(1.0, 0.0), ValidationError);
}

TEST_CASE("free-space path loss") {
  for (double d = 100.0; d < 50000.0; d *= 1.7) {
    CHECK(link::fspl_db(d, 2e9) == doctest::Approx(oracle_fspl(d, 2e9)).epsilon(1e-12));
  }
  // Doubling distance adds 20 log10(2) dB.
  CHECK(link::fspl_db(2000.0, 2e9) - link::fspl_db(1000.0, 2e9) == doctest::Approx(20.0 * std::log10(2.0)));
  CHECK_THROWS_AS(link::fspl_db(0.0, 2e9), ValidationError);
}

TEST_CASE("beam mode parsing") {
  CHECK(link::parse_beam_mode("linear") == link::BeamMode::Linear);
  CHECK(link::parse_beam_mode("db-scaled") == link::BeamMode::DbScaled);
  CHECK(link::to_string(link::BeamMode::DbScaled) == "db-scaled");
  CHECK_THROWS_AS(link::parse_beam_mode("log"), ValidationError);
}

TEST_CASE("center device SNR recomputed from independent components") {
  const auto sat = link::reference_satellite();
  const link::DeviceConfig device;
  const auto loc = geo::GeoPoint::make(37.2, -122.1);
  const auto r = link::snr_db(device, sat, loc, link::BeamMode::Linear);
  const double d = geo::great_circle_km(loc, sat.beam_center);
  const double expected = 23.0 + (-10.0) + (25.0 + 10.0 * std::log10(oracle_rolloff(d, 1000.0))) -
                          oracle_fspl(geo::slant_range_km(loc, sat), 2e9) + (-10.0) + 167.42;
  CHECK(r.snr_db == doctest::Approx(expected).epsilon(1e-10));
  CHECK(r.snr_db == doctest::Approx(5.55).epsilon(0.5 / 5.55));
  CHECK(r.mcs_level == 11);

  const auto scaled = link::snr_db(device, sat, loc, link::BeamMode::DbScaled);
  CHECK(scaled.beam_gain_dbi == doctest::Approx(25.0 * oracle_rolloff(d, 1000.0)).epsilon(1e-10));
}

TEST_CASE("SNR recomposes from its dB terms in both modes") {
  const auto sat = link::reference_satellite();
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> lat(25.0, 50.0), lon(-135.0, -105.0), eps(0.5, 120.0);
  for (int i = 0; i < 500; ++i) {
    link::DeviceConfig device;
    device.off_boresight_deg = eps(rng);
    const auto loc = geo::GeoPoint::make(lat(rng), lon(rng));
    for (const auto mode : {link::BeamMode::Linear, link::BeamMode::DbScaled}) {
      const auto r = link::snr_db(device, sat, loc, mode);
      if (std::isfinite(r.snr_db)) CHECK(r.recomposed_snr_db() == doctest::Approx(r.snr_db).epsilon(1e-12));
      const auto entry = link::McsTable::nb_iot_default().lookup(r.snr_db);
      CHECK(r.mcs_level == (entry ? entry->mcs_level : -1));
    }
  }
}

TEST_CASE("unservable device location") {
  const auto sat = link::reference_satellite();
  CHECK_THROWS_AS(link::snr_db(link::DeviceConfig{}, sat, geo::GeoPoint::make(0.0, 55.0)), UnservableError);
}

TEST_CASE("device validation") {
  link::DeviceConfig d;
  d.carrier_hz = 0.0;
  CHECK_THROWS_AS(d.validate(), ValidationError);
  d = {};
  d.off_boresight_deg = 0.0;
  CHECK_THROWS_AS(d.validate(), ValidationError);
}

TEST_CASE("MCS table lookups") {
  const auto table = link::McsTable::nb_iot_default();
  CHECK(table.lookup(5.55)->mcs_level == 11);
  CHECK(table.lookup(-0.45)->mcs_level == 5);
  CHECK(table.lookup(-6.0)->mcs_level == 0);
  CHECK_FALSE(table.lookup(-6.01).has_value());
  CHECK(table.lookup(100.0)->mcs_level == 13);
  CHECK(table.by_level(5)->ru_per_20_bytes == 3);
  CHECK(table.by_level(11)->ru_per_20_bytes == 1);
  CHECK_FALSE(table.by_level(14).has_value());
  CHECK_FALSE(table.lookup(-std::numeric_limits<double>::infinity()).has_value());
}

TEST_CASE("MCS table validation and CSV round trip") {
  CHECK_THROWS_AS(link::McsTable({{0.0, 1, 2}, {0.0, 2, 1}}), ValidationError);
  CHECK_THROWS_AS(link::McsTable({{0.0, 2, 2}, {1.0, 1, 1}}), ValidationError);
  CHECK_THROWS_AS(link::McsTable({{0.0, 1, 0}}), ValidationError);
  CHECK_THROWS_AS(link::McsTable(std::vector<link::McsEntry>{}), ValidationError);
  const link::McsTable unsorted({{3.5, 7, 1}, {-1.25, 2, 4}});
  CHECK(unsorted.entries().front().mcs_level == 2);

  testing::TempDir dir("mcs");
  const auto table = link::McsTable::nb_iot_default();
  table.save_csv(dir / "mcs.csv");
  CHECK(link::McsTable::load_csv(dir / "mcs.csv").entries() == table.entries());
  CHECK(link::McsTable::load_csv(testing::data_dir() / "mcs_table.csv").entries() == table.entries());
}
