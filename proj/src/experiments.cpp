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

#include "netcoop/experiments.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>

namespace netcoop::scenario {
namespace {

std::optional<double> eta_or_empty(const ScenarioConfig& cfg, Scheme scheme) {
  try {
    const EfficiencyReport r = closed_form::scheme_efficiency(
        scheme, cfg.radio, cfg.geo, cfg.tgt, cfg.options);
    if (std::isfinite(r.eta) && r.eta > 0.0) return r.eta;
  } catch (const std::domain_error&) {
  }
  return std::nullopt;
}

VerifyStatus judge(double p_target, double p_mc, double ci95,
                   std::uint64_t trials, bool power_ok) {
  if (static_cast<double>(trials) * p_target < kMinExpectedEvents) {
    return VerifyStatus::kInconclusive;
  }
  const bool outage_ok = std::abs(p_mc - p_target) <= 3.0 * ci95;
  return outage_ok && power_ok ? VerifyStatus::kPass : VerifyStatus::kFail;
}

}  // namespace

std::vector<SchemeResult> run_analyze(const ScenarioConfig& cfg) {
  std::vector<SchemeResult> out;
  for (Scheme scheme : kAllSchemes) {
    SchemeResult result{scheme, std::nullopt, {}};
    try {
      result.report = closed_form::scheme_efficiency(scheme, cfg.radio, cfg.geo,
                                                     cfg.tgt, cfg.options);
    } catch (const std::domain_error& e) {
      result.error = e.what();
    }
    out.push_back(std::move(result));
  }
  return out;
}

void SweepSpec::validate() const {
  if (!(start > 0.0) || !std::isfinite(stop) || !(start < stop)) {
    throw std::invalid_argument("sweep needs 0 < start < stop");
  }
  if (points < 2) throw std::invalid_argument("sweep needs at least 2 points");
}

SweepSpec default_sweep(SweepVariable variable) {
  if (variable == SweepVariable::kCellDistance) {
    return SweepSpec{variable, 200.0, 2000.0, 91, SweepScale::kLinear};
  }
  return SweepSpec{variable, 1.0, 100.0, 100, SweepScale::kLinear};
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  spec.validate();
  std::vector<double> grid(static_cast<std::size_t>(spec.points));
  const double last = spec.points - 1;
  for (int i = 0; i < spec.points; ++i) {
    const double f = i / last;
    if (spec.scale == SweepScale::kLog) {
      grid[i] = std::exp(std::log(spec.start) +
                         f * (std::log(spec.stop) - std::log(spec.start)));
    } else {
      grid[i] = spec.start + f * (spec.stop - spec.start);
    }
  }
  grid.front() = spec.start;
  grid.back() = spec.stop;
  return grid;
}

SweepRow evaluate_point(const ScenarioConfig& cfg, SweepVariable variable,
                        double value) {
  ScenarioConfig point = cfg;
  if (variable == SweepVariable::kCellDistance) {
    point.geo.d_1b = point.geo.d_2b = value;
  } else {
    point.geo.d_12 = point.geo.d_21 = value;
  }
  return SweepRow{value, eta_or_empty(point, Scheme::kTraditional),
                  eta_or_empty(point, Scheme::kIntra),
                  eta_or_empty(point, Scheme::kInter)};
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& cfg,
                                const SweepSpec& spec) {
  std::vector<SweepRow> rows;
  for (double v : sweep_grid(spec)) rows.push_back(evaluate_point(cfg, spec.variable, v));
  return rows;
}

std::string_view status_name(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::kPass: return "pass";
    case VerifyStatus::kFail: return "fail";
    case VerifyStatus::kInconclusive: return "inconclusive";
    case VerifyStatus::kSkipped: return "skipped";
  }
  return "unknown";
}

std::array<VerifyRow, 2> verify_allocation(const ScenarioConfig& cfg,
                                           const PowerAllocation& alloc,
                                           const monte_carlo::TrialPlan& plan) {
  const auto links = closed_form::scheme_links(alloc.scheme, cfg.radio, cfg.geo,
                                               cfg.tgt, cfg.options);
  const monte_carlo::OutageEstimate est = monte_carlo::simulate(links, alloc, plan);

  const double diff = std::abs(est.mean_power - alloc.total);
  const double exact_tol = 1e-12 * alloc.total;
  const bool power_ok = diff <= 3.0 * est.mean_power_stderr + exact_tol;

  std::array<VerifyRow, 2> rows;
  for (int user = 1; user <= 2; ++user) {
    VerifyRow& row = rows[user - 1];
    row.scheme = alloc.scheme;
    row.user = user;
    row.p_target = cfg.tgt.p_out;
    row.p_mc = user == 1 ? est.p_hat_u1 : est.p_hat_u2;
    row.ci95 = user == 1 ? est.ci95_u1 : est.ci95_u2;
    row.power_analytic_w = alloc.total;
    row.power_mc_w = est.mean_power;
    row.status = judge(row.p_target, row.p_mc, row.ci95, est.trials, power_ok);
  }
  return rows;
}

std::vector<VerifyRow> run_verify(const ScenarioConfig& cfg,
                                  const monte_carlo::TrialPlan& plan) {
  std::vector<VerifyRow> rows;
  for (Scheme scheme : kAllSchemes) {
    PowerAllocation alloc;
    try {
      alloc = closed_form::scheme_powers(scheme, cfg.radio, cfg.geo, cfg.tgt,
                                         cfg.options);
    } catch (const std::domain_error&) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      for (int user = 1; user <= 2; ++user) {
        rows.push_back(VerifyRow{scheme, user, cfg.tgt.p_out, nan, nan, nan,
                                 nan, VerifyStatus::kSkipped});
      }
      continue;
    }
    for (const VerifyRow& row : verify_allocation(cfg, alloc, plan)) {
      rows.push_back(row);
    }
  }
  return rows;
}

bool verification_passed(const std::vector<VerifyRow>& rows) {
  for (const VerifyRow& row : rows) {
    if (row.status == VerifyStatus::kFail) return false;
  }
  return true;
}

}  // namespace netcoop::scenario
