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

#ifndef NETCOOP_EXPERIMENTS_HPP_
#define NETCOOP_EXPERIMENTS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netcoop/closed_form.hpp"
#include "netcoop/monte_carlo.hpp"
#include "netcoop/scenario.hpp"

namespace netcoop::scenario {

using closed_form::EfficiencyReport;
using closed_form::PowerAllocation;
using closed_form::Scheme;

inline constexpr std::array<Scheme, 3> kAllSchemes = {
    Scheme::kTraditional, Scheme::kIntra, Scheme::kInter};

// One scheme's analysis; `report` is empty when the scheme is infeasible, in
// which case `error` says why.
struct SchemeResult {
  Scheme scheme;
  std::optional<EfficiencyReport> report;
  std::string error;
};

// Traditional, intra, inter, in that order.
std::vector<SchemeResult> run_analyze(const ScenarioConfig& cfg);

enum class SweepVariable {
  kCellDistance,       // d_1b = d_2b
  kInterUserDistance,  // d_12 = d_21
};

enum class SweepScale { kLinear, kLog };

struct SweepSpec {
  SweepVariable variable = SweepVariable::kInterUserDistance;
  double start = 1.0;
  double stop = 100.0;
  int points = 100;
  SweepScale scale = SweepScale::kLinear;

  void validate() const;
};

SweepSpec default_sweep(SweepVariable variable);

std::vector<double> sweep_grid(const SweepSpec& spec);

struct SweepRow {
  double swept_m = 0.0;
  std::optional<double> eta_traditional;
  std::optional<double> eta_intra;
  std::optional<double> eta_inter;

  bool operator==(const SweepRow&) const = default;
};

SweepRow evaluate_point(const ScenarioConfig& cfg, SweepVariable variable,
                        double value);
std::vector<SweepRow> run_sweep(const ScenarioConfig& cfg,
                                const SweepSpec& spec);

enum class VerifyStatus { kPass, kFail, kInconclusive, kSkipped };

std::string_view status_name(VerifyStatus status);

struct VerifyRow {
  Scheme scheme = Scheme::kTraditional;
  int user = 1;
  double p_target = 0.0;
  double p_mc = 0.0;
  double ci95 = 0.0;
  double power_analytic_w = 0.0;
  double power_mc_w = 0.0;
  VerifyStatus status = VerifyStatus::kSkipped;
};

// Rows whose expected number of outage events n * p_target falls below this
// are reported inconclusive rather than pass/fail.
inline constexpr double kMinExpectedEvents = 10.0;

// Simulates `alloc` for one scheme and checks both users against the target:
// outage within 3 * ci95 of p_target, mean consumed power within 3 standard
// errors of alloc.total (exactly equal for the traditional scheme).
std::array<VerifyRow, 2> verify_allocation(const ScenarioConfig& cfg,
                                           const PowerAllocation& alloc,
                                           const monte_carlo::TrialPlan& plan);

// Closed-form powers for every scheme, each checked by verify_allocation.
std::vector<VerifyRow> run_verify(const ScenarioConfig& cfg,
                                  const monte_carlo::TrialPlan& plan);

bool verification_passed(const std::vector<VerifyRow>& rows);

}  // namespace netcoop::scenario

#endif  // NETCOOP_EXPERIMENTS_HPP_
