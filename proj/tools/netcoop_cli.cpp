// Copyright 2026 The netcoop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// netcoop: energy efficiency of cooperative cellular uplinks.
//
//   netcoop analyze [--config PATH] [--out PATH] [--json]
//   netcoop sweep   [--var cell|inter_user] [--start M] [--stop M]
//                   [--points N] [--log] ...
//   netcoop verify  [--trials N] [--seed S] [--threads T] ...
//
// Exit status: 0 success, 1 usage or configuration error, 2 verification
// failure.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "netcoop/experiments.hpp"
#include "netcoop/report.hpp"
#include "netcoop/scenario.hpp"

namespace {

using namespace netcoop;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

struct CommonOptions {
  std::string config;
  std::string out;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--config", opts.config, "scenario file (key = value lines)");
  cmd->add_option("--out", opts.out, "output file (default: standard output)");
  cmd->add_flag("--json", opts.json, "emit JSON instead of CSV");
}

scenario::ScenarioConfig load(const CommonOptions& opts) {
  return opts.config.empty() ? scenario::ScenarioConfig{}
                             : scenario::load_config(opts.config);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy efficiency of cooperative cellular uplink transmission"};
  app.require_subcommand(1);

  CommonOptions analyze_opts;
  auto* analyze = app.add_subcommand("analyze", "minimum powers and bits/J for every scheme");
  add_common(analyze, analyze_opts);

  CommonOptions sweep_opts;
  std::string sweep_var = "inter_user";
  std::optional<double> sweep_start;
  std::optional<double> sweep_stop;
  std::optional<int> sweep_points;
  bool sweep_log = false;
  auto* sweep = app.add_subcommand("sweep", "energy efficiency over a distance grid");
  add_common(sweep, sweep_opts);
  sweep->add_option("--var", sweep_var, "cell (d_1b = d_2b) or inter_user (d_12 = d_21)")
      ->check(CLI::IsMember({"cell", "cell_distance", "inter_user",
                             "inter_user_distance"}));
  sweep->add_option("--start", sweep_start, "first grid value (m)");
  sweep->add_option("--stop", sweep_stop, "last grid value (m)");
  sweep->add_option("--points", sweep_points, "number of grid points (>= 2)");
  sweep->add_flag("--log", sweep_log, "logarithmic grid spacing");

  CommonOptions verify_opts;
  monte_carlo::TrialPlan plan;
  auto* verify = app.add_subcommand("verify", "closed forms against Monte Carlo");
  add_common(verify, verify_opts);
  verify->add_option("--trials", plan.n_trials, "Monte Carlo trials per scheme")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", plan.seed, "64-bit seed");
  verify->add_option("--threads", plan.threads, "worker threads (0: all cores)");
  verify->add_option("--chunk", plan.chunk_size, "trials per work unit")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) {
      const auto cfg = load(analyze_opts);
      const auto results = scenario::run_analyze(cfg);
      report::write_text(analyze_opts.json ? report::analyze_json(results)
                                           : report::analyze_csv(results),
                         analyze_opts.out);
      return kExitOk;
    }
    if (*sweep) {
      const auto cfg = load(sweep_opts);
      const auto variable = sweep_var.starts_with("cell")
                                ? scenario::SweepVariable::kCellDistance
                                : scenario::SweepVariable::kInterUserDistance;
      scenario::SweepSpec spec = scenario::default_sweep(variable);
      if (sweep_start) spec.start = *sweep_start;
      if (sweep_stop) spec.stop = *sweep_stop;
      if (sweep_points) spec.points = *sweep_points;
      if (sweep_log) spec.scale = scenario::SweepScale::kLog;
      const auto rows = scenario::run_sweep(cfg, spec);
      report::write_text(sweep_opts.json ? report::sweep_json(rows)
                                         : report::sweep_csv(rows),
                         sweep_opts.out);
      return kExitOk;
    }
    if (*verify) {
      const auto cfg = load(verify_opts);
      const auto rows = scenario::run_verify(cfg, plan);
      report::write_text(verify_opts.json ? report::verify_json(rows)
                                          : report::verify_csv(rows),
                         verify_opts.out);
      return scenario::verification_passed(rows) ? kExitOk : kExitVerifyFailed;
    }
  } catch (const scenario::ConfigError& e) {
    std::cerr << "netcoop: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "netcoop: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "netcoop: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
