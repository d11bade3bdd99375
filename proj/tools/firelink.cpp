#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "firelink/commands.hpp"
#include "firelink/errors.hpp"

namespace {

using firelink::cli::CommandOptions;

struct Args {
  std::string config;
  std::string out = "out";
  std::optional<std::uint64_t> seed;
  std::string scheme = "both";
  std::string mode = "linear";
  std::optional<double> lat;
  std::optional<double> lon;
};

CommandOptions to_options(const Args& args) {
  CommandOptions opts;
  opts.out_dir = args.out;
  opts.seed = args.seed;
  opts.scheme = firelink::cli::parse_scheme(args.scheme);
  opts.mode = firelink::link::parse_beam_mode(args.mode);
  if (args.lat.has_value() != args.lon.has_value()) {
    throw firelink::ValidationError("--lat and --lon must be given together");
  }
  if (args.lat) opts.location = firelink::geo::GeoPoint::make(*args.lat, *args.lon);
  return opts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wildfire sensor placement and satellite IoT link planning"};
  app.require_subcommand(1);
  Args args;

  auto add_common = [&args](CLI::App* cmd, bool needs_config) {
    auto* opt = cmd->add_option("--config", args.config, "Run configuration file");
    if (needs_config) opt->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", args.out, "Output directory")->capture_default_str();
    cmd->add_option("--seed", args.seed, "Override run.seed");
    cmd->add_option("--scheme", args.scheme, "optimized, uniform or both")->capture_default_str();
  };

  auto* plan = app.add_subcommand("plan", "Place sensors and write placements and heatmaps");
  add_common(plan, true);
  auto* linkbudget = app.add_subcommand("linkbudget", "Uplink SNR for the configured sites or one location");
  add_common(linkbudget, true);
  linkbudget->add_option("--mode", args.mode, "Beam gain mode: linear or db-scaled")->capture_default_str();
  linkbudget->add_option("--lat", args.lat, "Device latitude in degrees");
  linkbudget->add_option("--lon", args.lon, "Device longitude in degrees");
  auto* capacity = app.add_subcommand("capacity", "Carrier and spectrum sizing");
  add_common(capacity, true);
  auto* simulate = app.add_subcommand("simulate", "Replay the fire catalog against sensor placements");
  add_common(simulate, true);
  auto* report = app.add_subcommand("report", "Collect existing outputs into report.json");
  add_common(report, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? firelink::cli::kExitOk : firelink::cli::kExitValidation;
  }

  try {
    const auto opts = to_options(args);
    nlohmann::json doc;
    if (report->parsed()) {
      doc = firelink::cli::run_report(opts);
    } else {
      const auto cfg = firelink::config::RunConfig::load(args.config);
      if (plan->parsed()) doc = firelink::cli::run_plan(cfg, opts);
      if (linkbudget->parsed()) doc = firelink::cli::run_linkbudget(cfg, opts);
      if (capacity->parsed()) doc = firelink::cli::run_capacity(cfg, opts);
      if (simulate->parsed()) doc = firelink::cli::run_simulate(cfg, opts);
    }
    std::cout << doc.dump(2) << '\n';
    return firelink::cli::kExitOk;
  } catch (const firelink::NumericError& err) {
    std::cerr << "numeric error: " << err.what() << '\n';
    return firelink::cli::kExitNumeric;
  } catch (const firelink::ValidationError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return firelink::cli::kExitValidation;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << '\n';
    return EXIT_FAILURE;
  }
}
