#include <cstdlib>
#include <string>

#include "doctest.h"
#include "firelink/commands.hpp"
#include "firelink/errors.hpp"
#include "firelink/io.hpp"
#include "support.hpp"

using namespace firelink;

namespace {

std::string quick_config(const std::string& extra = "") {
  const auto data = testing::data_dir().string();
  return "data.regions = " + data + "/regions.csv\n" + "data.fires = " + data + "/fires.csv\n" +
         "fire.theta_wilt = 0.10\nfire.theta_field = 0.35\nplan.budget = 20000\nplan.sweep = 0,20000\n" +
         "campaign.trials = 3\ncampaign.sweep = 0,20000\n" +
         "link.sites = center\nlink.center.lat = 37.2\nlink.center.lon = -122.1\n" + extra;
}

config::RunConfig load(const std::string& text) { return config::RunConfig::from(config::KeyValueConfig::parse(text)); }

int run_cli(const std::string& args) {
  const std::string cmd = std::string(FIRELINK_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("scheme parsing") {
  CHECK(cli::parse_scheme("both") == cli::Scheme::Both);
  CHECK(cli::parse_scheme("uniform") == cli::Scheme::Uniform);
  CHECK_THROWS_AS(cli::parse_scheme("random"), ValidationError);
}

TEST_CASE("plan writes placements, heatmaps and the report") {
  testing::TempDir dir("plan");
  cli::CommandOptions opts;
  opts.out_dir = dir.path();
  const auto report = cli::run_plan(load(quick_config()), opts);
  for (const char* name : {"placement_optimized.csv", "placement_uniform.csv", "placement_optimized.json",
                           "heatmap_optimized.csv", "heatmap_uniform.csv", "utility_vs_budget.csv",
                           "plan_report.json"}) {
    CHECK(std::filesystem::exists(dir / name));
  }
  const double u_opt = report["schemes"]["optimized"]["utility"].get<double>();
  const double u_uni = report["schemes"]["uniform"]["utility"].get<double>();
  CHECK(u_opt >= u_uni);
  // K = 0 row of the sweep has zero utility for both schemes.
  CHECK(report["sweep"][0]["optimized"].get<double>() == 0.0);
  CHECK(report["sweep"][0]["uniform"].get<double>() == 0.0);
  // Written placement reloads through the ingestion path.
  const auto p = io::load_placement_csv(dir / "placement_optimized.csv", 11000);
  CHECK(p.total() == report["schemes"]["optimized"]["sensors_used"].get<std::int64_t>());
}

TEST_CASE("plan with a single scheme") {
  testing::TempDir dir("plan_one");
  cli::CommandOptions opts;
  opts.out_dir = dir.path();
  opts.scheme = cli::Scheme::Uniform;
  const auto report = cli::run_plan(load(quick_config()), opts);
  CHECK_FALSE(report["schemes"].contains("optimized"));
  CHECK_FALSE(std::filesystem::exists(dir / "placement_optimized.csv"));
}

TEST_CASE("linkbudget reports both modes and recomposes") {
  testing::TempDir dir("link");
  cli::CommandOptions opts;
  opts.out_dir = dir.path();
  const auto doc = cli::run_linkbudget(load(quick_config()), opts);
  const auto& site = doc["sites"][0];
  CHECK(site["name"] == "center");
  for (const char* mode : {"linear", "db-scaled"}) {
    const auto r = site["modes"][mode].get<link::LinkResult>();
    CHECK(r.recomposed_snr_db() == doctest::Approx(r.snr_db).epsilon(1e-12));
  }
  CHECK(std::filesystem::exists(dir / "linkbudget.json"));

  opts.location = geo::GeoPoint::make(0.0, 55.0);
  CHECK_THROWS_AS(cli::run_linkbudget(load(quick_config()), opts), UnservableError);
}

TEST_CASE("capacity report") {
  testing::TempDir dir("capacity");
  cli::CommandOptions opts;
  opts.out_dir = dir.path();
  const auto doc = cli::run_capacity(load(quick_config()), opts);
  CHECK(doc["report_duration_ms"].get<double>() == 1096.0);
  CHECK(std::filesystem::exists(dir / "capacity_vs_budget.csv"));
}

TEST_CASE("simulate and report") {
  testing::TempDir dir("simulate");
  cli::CommandOptions opts;
  opts.out_dir = dir.path();
  const auto cfg = load(quick_config());
  const auto summary = cli::run_simulate(cfg, opts);
  CHECK(std::filesystem::exists(dir / "campaign_optimized.json"));
  CHECK(std::filesystem::exists(dir / "fires_uniform.csv"));
  CHECK(std::filesystem::exists(dir / "campaign_sweep.csv"));
  // Per-fire table reloads and its means reproduce the totals.
  const auto fires = io::load_fire_table(dir / "fires_optimized.csv");
  double burned = 0.0;
  for (const auto& f : fires) burned += f.burned_km2;
  CHECK(burned == doctest::Approx(summary["schemes"]["optimized"]["burned_km2"].get<double>()).epsilon(1e-12));

  CHECK_THROWS_AS(cli::run_report(cli::CommandOptions{testing::TempDir("empty").path()}), ValidationError);
  cli::run_capacity(cfg, opts);
  const auto report = cli::run_report(opts);
  CHECK(report.contains("campaign"));
  CHECK(report.contains("capacity"));
  CHECK(std::filesystem::exists(dir / "report.json"));
}

TEST_CASE("simulate is byte-identical across reruns and honours the seed override") {
  testing::TempDir a("rerun_a"), b("rerun_b"), c("rerun_c");
  const auto cfg = load(quick_config());
  cli::CommandOptions opts;
  opts.out_dir = a.path();
  cli::run_simulate(cfg, opts);
  opts.out_dir = b.path();
  cli::run_simulate(cfg, opts);
  opts.out_dir = c.path();
  opts.seed = 99;
  cli::run_simulate(cfg, opts);
  for (const auto& entry : std::filesystem::directory_iterator(a.path())) {
    const auto name = entry.path().filename().string();
    CHECK(testing::read_file(a / name) == testing::read_file(b / name));
  }
  CHECK(testing::read_file(a / "campaign_optimized.json") != testing::read_file(c / "campaign_optimized.json"));
}

TEST_CASE("command line exit codes") {
  testing::TempDir dir("exit");
  testing::write_file(dir / "ok.conf", quick_config());
  testing::write_file(dir / "bad.conf", quick_config("plan.unknown = 1\n"));
  const auto conf = (dir / "ok.conf").string();
  const auto out = (dir / "out").string();
  CHECK(run_cli("capacity --config " + conf + " --out " + out) == 0);
  CHECK(std::filesystem::exists(dir / "out" / "capacity.json"));
  CHECK(run_cli("capacity --config " + (dir / "bad.conf").string() + " --out " + out) == 2);
  CHECK(run_cli("linkbudget --config " + conf + " --out " + out + " --lat 0 --lon 55") == 2);
  CHECK(run_cli("linkbudget --config " + conf + " --out " + out + " --lat 37") == 2);
  CHECK(run_cli("linkbudget --config " + conf + " --out " + out + " --mode sideways") == 2);
  CHECK(run_cli("plan --config " + conf + " --out " + out + " --scheme sometimes") == 2);
  CHECK(run_cli("simulate") == 2);
  CHECK(run_cli("frobnicate") == 2);
  CHECK(run_cli("report --out " + (dir / "nothing").string()) == 2);
  CHECK(run_cli("report --out " + out) == 0);
}
