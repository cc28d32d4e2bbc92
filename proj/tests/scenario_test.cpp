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

#include "netcoop/scenario.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "netcoop/experiments.hpp"
#include "oracles.hpp"

namespace netcoop::scenario {
namespace {

TEST(ParseConfigTest, EmptyTextGivesDefaults) {
  EXPECT_EQ(parse_config(""), ScenarioConfig{});
  EXPECT_EQ(parse_config("# only a comment\n\n   \n"), ScenarioConfig{});
}

TEST(ParseConfigTest, InterUserDistanceDefaultsToSymmetric) {
  const ScenarioConfig cfg = parse_config("d_12_m = 5\n");
  EXPECT_EQ(cfg.geo.d_12, 5.0);
  EXPECT_EQ(cfg.geo.d_21, 5.0);
  ScenarioConfig expected;
  expected.geo.d_12 = expected.geo.d_21 = 5.0;
  EXPECT_EQ(cfg, expected);

  const ScenarioConfig asym = parse_config("d_21_m = 9\nd_12_m = 5\n");
  EXPECT_EQ(asym.geo.d_12, 5.0);
  EXPECT_EQ(asym.geo.d_21, 9.0);
}

TEST(ParseConfigTest, ConvertsDecibelKeys) {
  const ScenarioConfig cfg = parse_config(
      "g_bs_dbi = 10  # sector antenna\n"
      "n0_dbm_hz = -170\n"
      "intra_exchange_double_rate = true\n");
  EXPECT_NEAR(cfg.radio.g_bs, 10.0, 1e-14);
  EXPECT_NEAR(cfg.radio.n0, 1e-20, 1e-34);
  EXPECT_TRUE(cfg.options.intra_exchange_double_rate);
}

ConfigError parse_error(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e;
  }
  ADD_FAILURE() << "no ConfigError for: " << text;
  return ConfigError("", 0, "");
}

TEST(ParseConfigTest, RejectsOutOfRangeTarget) {
  const ConfigError e = parse_error("rate_bps = 1e6\npout_target = 1.5\n");
  EXPECT_EQ(e.key(), "pout_target");
  EXPECT_EQ(e.line(), 2);
  EXPECT_NE(std::string(e.what()).find("pout_target"), std::string::npos);
  EXPECT_EQ(parse_error("pout_target = 0").key(), "pout_target");
}

TEST(ParseConfigTest, RejectsMalformedInput) {
  EXPECT_EQ(parse_error("bogus_key = 1").key(), "bogus_key");
  EXPECT_EQ(parse_error("f_c_hz = 1\nf_c_hz = 2").line(), 2);
  EXPECT_EQ(parse_error("f_c_hz = 1\nf_c_hz = 2").key(), "f_c_hz");
  EXPECT_EQ(parse_error("d_1b_m = -3").key(), "d_1b_m");
  EXPECT_EQ(parse_error("b_c_hz = abc").key(), "b_c_hz");
  EXPECT_EQ(parse_error("b_c_hz = 1e6 MHz").key(), "b_c_hz");
  EXPECT_EQ(parse_error("b_c_hz =").key(), "b_c_hz");
  EXPECT_EQ(parse_error("\n\njust words").line(), 3);
  EXPECT_EQ(parse_error("intra_exchange_double_rate = maybe").key(),
            "intra_exchange_double_rate");
  EXPECT_EQ(parse_error("sigma2_12 = inf").key(), "sigma2_12");
}

TEST(ParseConfigTest, RoundTripsThroughText) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto s = testing::random_scenario(rng);
    ScenarioConfig cfg;
    cfg.radio = s.radio;
    cfg.geo = s.geo;
    cfg.tgt = {s.p_out, s.rate};
    cfg.options.intra_exchange_double_rate = s.double_rate_exchange;
    const ScenarioConfig back = parse_config(to_config_text(cfg));
    EXPECT_NEAR(back.radio.n0 / cfg.radio.n0, 1.0, 1e-14);
    EXPECT_NEAR(back.radio.g_u1 / cfg.radio.g_u1, 1.0, 1e-14);
    EXPECT_NEAR(back.radio.g_bs / cfg.radio.g_bs, 1.0, 1e-14);
    EXPECT_EQ(back.radio.f_c, cfg.radio.f_c);
    EXPECT_EQ(back.radio.b_s, cfg.radio.b_s);
    EXPECT_EQ(back.radio.sigma2_21, cfg.radio.sigma2_21);
    EXPECT_EQ(back.geo, cfg.geo);
    EXPECT_EQ(back.tgt, cfg.tgt);
    EXPECT_EQ(back.options, cfg.options);
  }
}

TEST(LoadConfigTest, ReadsFileAndReportsMissingFile) {
  const auto path =
      std::filesystem::temp_directory_path() / "netcoop_load_config_test.cfg";
  {
    std::ofstream out(path);
    out << "d_1b_m = 750\nd_2b_m = 1250\n";
  }
  const ScenarioConfig cfg = load_config(path.string());
  EXPECT_EQ(cfg.geo.d_1b, 750.0);
  EXPECT_EQ(cfg.geo.d_2b, 1250.0);
  std::filesystem::remove(path);
  EXPECT_THROW(load_config(path.string()), ConfigError);
}

TEST(AnalyzeTest, DefaultsOrderSchemes) {
  const auto results = run_analyze({});
  ASSERT_EQ(results.size(), 3u);
  for (const auto& r : results) ASSERT_TRUE(r.report) << r.error;
  EXPECT_EQ(results[0].scheme, closed_form::Scheme::kTraditional);
  const double trad = results[0].report->eta;
  const double intra = results[1].report->eta;
  const double inter = results[2].report->eta;
  EXPECT_GT(inter, intra);
  EXPECT_GT(intra, trad);
  EXPECT_EQ(results[2].report->allocation.p1_cellular,
            results[2].report->allocation.p2_cellular);
}

TEST(AnalyzeTest, DistantPartnersMakeCooperationLose) {
  ScenarioConfig cfg;
  cfg.geo.d_12 = cfg.geo.d_21 = 10'000.0;
  const auto results = run_analyze(cfg);
  const double trad = results[0].report->eta;
  EXPECT_LT(results[1].report->eta, trad);
  EXPECT_LT(results[2].report->eta, trad);
}

TEST(AnalyzeTest, InfeasibleTargetIsReportedPerScheme) {
  ScenarioConfig cfg;
  cfg.tgt.p_out = closed_form::min_feasible_p_out() * 1e-3;
  const auto results = run_analyze(cfg);
  EXPECT_TRUE(results[0].report.has_value());
  EXPECT_FALSE(results[1].report.has_value());
  EXPECT_FALSE(results[2].report.has_value());
  EXPECT_NE(results[2].error.find("smallest feasible"), std::string::npos);
}

TEST(SweepTest, GridEndpointsAndScale) {
  const auto lin = sweep_grid({SweepVariable::kCellDistance, 200.0, 2000.0, 91,
                               SweepScale::kLinear});
  ASSERT_EQ(lin.size(), 91u);
  EXPECT_EQ(lin.front(), 200.0);
  EXPECT_EQ(lin.back(), 2000.0);
  EXPECT_NEAR(lin[1], 220.0, 1e-12);
  const auto lg = sweep_grid({SweepVariable::kInterUserDistance, 1.0, 1000.0, 4,
                              SweepScale::kLog});
  EXPECT_NEAR(lg[1], 10.0, 1e-12);
  EXPECT_NEAR(lg[2], 100.0, 1e-11);
  EXPECT_THROW(sweep_grid({SweepVariable::kCellDistance, 10.0, 5.0, 4,
                           SweepScale::kLinear}),
               std::invalid_argument);
  EXPECT_THROW(sweep_grid({SweepVariable::kCellDistance, 1.0, 5.0, 1,
                           SweepScale::kLinear}),
               std::invalid_argument);
}

TEST(SweepTest, DefaultRanges) {
  const SweepSpec cell = default_sweep(SweepVariable::kCellDistance);
  EXPECT_EQ(cell.start, 200.0);
  EXPECT_EQ(cell.stop, 2000.0);
  const SweepSpec inter = default_sweep(SweepVariable::kInterUserDistance);
  EXPECT_EQ(inter.start, 1.0);
  EXPECT_EQ(inter.stop, 100.0);
}

TEST(SweepTest, TwoPointsGiveTwoRows) {
  const auto rows = run_sweep(
      {}, {SweepVariable::kCellDistance, 500.0, 600.0, 2, SweepScale::kLinear});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].swept_m, 500.0);
  EXPECT_EQ(rows[1].swept_m, 600.0);
}

TEST(SweepTest, InterUserSweepKeepsTraditionalFixed) {
  const auto rows = run_sweep({}, default_sweep(SweepVariable::kInterUserDistance));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].eta_traditional, rows[0].eta_traditional);
    EXPECT_LT(*rows[i].eta_inter, *rows[i - 1].eta_inter);
    EXPECT_LT(*rows[i].eta_intra, *rows[i - 1].eta_intra);
    EXPECT_GT(*rows[i].eta_inter, *rows[i].eta_intra);
  }
}

TEST(SweepTest, CellSweepFavoursCooperationAtShortPartnerDistance) {
  for (double d12 : {5.0, 20.0}) {
    ScenarioConfig cfg;
    cfg.geo.d_12 = cfg.geo.d_21 = d12;
    for (const SweepRow& row :
         run_sweep(cfg, default_sweep(SweepVariable::kCellDistance))) {
      EXPECT_GT(*row.eta_inter, *row.eta_intra) << row.swept_m;
      EXPECT_GT(*row.eta_intra, *row.eta_traditional) << row.swept_m;
    }
  }
}

TEST(SweepTest, RowsArePureFunctionsOfTheirPoint) {
  const ScenarioConfig cfg;
  SweepSpec spec{SweepVariable::kInterUserDistance, 2.0, 80.0, 12,
                 SweepScale::kLog};
  const auto rows = run_sweep(cfg, spec);
  const auto grid = sweep_grid(spec);
  std::vector<double> shuffled = grid;
  std::mt19937_64 rng(1);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  for (double v : shuffled) {
    const auto i = std::find(grid.begin(), grid.end(), v) - grid.begin();
    EXPECT_EQ(evaluate_point(cfg, spec.variable, v), rows[i]);
  }
}

TEST(VerifyTest, TooFewTrialsIsInconclusive) {
  monte_carlo::TrialPlan plan;
  plan.n_trials = 100;
  const auto rows = run_verify({}, plan);
  ASSERT_EQ(rows.size(), 6u);
  for (const VerifyRow& row : rows) {
    EXPECT_EQ(row.status, VerifyStatus::kInconclusive);
  }
  EXPECT_TRUE(verification_passed(rows));
}

TEST(VerifyTest, PerturbedPowerFails) {
  ScenarioConfig cfg;
  cfg.tgt.p_out = 0.01;
  auto alloc = closed_form::inter_total_power(cfg.radio, cfg.geo, cfg.tgt);
  alloc.p1_cellular *= 1.5;
  alloc.total = closed_form::aggregate_total(alloc, cfg.tgt.p_out);
  monte_carlo::TrialPlan plan;
  plan.n_trials = 1'000'000;
  const auto rows = verify_allocation(cfg, alloc, plan);
  EXPECT_EQ(rows[0].status, VerifyStatus::kFail);
  EXPECT_FALSE(verification_passed({rows.begin(), rows.end()}));
}

TEST(VerifyTest, ClosedFormAllocationsPass) {
  ScenarioConfig cfg;
  cfg.tgt.p_out = 0.01;
  monte_carlo::TrialPlan plan;
  plan.n_trials = 1'000'000;
  const auto rows = run_verify(cfg, plan);
  ASSERT_EQ(rows.size(), 6u);
  for (const VerifyRow& row : rows) {
    EXPECT_EQ(row.status, VerifyStatus::kPass)
        << closed_form::scheme_name(row.scheme) << " user " << row.user;
  }
}

TEST(VerifyTest, InfeasibleSchemesAreSkipped) {
  ScenarioConfig cfg;
  cfg.tgt.p_out = closed_form::min_feasible_p_out() * 1e-3;
  monte_carlo::TrialPlan plan;
  plan.n_trials = 1000;
  const auto rows = run_verify(cfg, plan);
  EXPECT_EQ(rows[2].status, VerifyStatus::kSkipped);
  EXPECT_EQ(rows[5].status, VerifyStatus::kSkipped);
  EXPECT_TRUE(std::isnan(rows[5].p_mc));
  EXPECT_EQ(status_name(VerifyStatus::kSkipped), "skipped");
}

}  // namespace
}  // namespace netcoop::scenario
