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

#ifndef NETCOOP_MONTE_CARLO_HPP_
#define NETCOOP_MONTE_CARLO_HPP_

#include <cstdint>

#include "netcoop/closed_form.hpp"
#include "netcoop/philox.hpp"

// SNR-level protocol simulation with Rayleigh block fading. Every trial draws
// |h12|^2, |h21|^2, |h1b|^2, |h2b|^2 (in that order) from its own Philox
// stream keyed by (seed, trial index), so results do not depend on how the
// trials are split across chunks or threads.

namespace netcoop::monte_carlo {

using closed_form::PowerAllocation;
using closed_form::SchemeLinks;
using closed_form::SchemeOptions;
using closed_form::Targets;
using link_budget::Geometry;
using link_budget::RadioParams;

struct TrialPlan {
  std::uint64_t n_trials = 10'000'000;
  std::uint64_t seed = 1;
  std::uint64_t chunk_size = 1 << 16;
  unsigned threads = 0;  // 0: hardware concurrency

  void validate() const;
};

enum class DecodeOutcome { kBothDecoded, kFallback };

struct OutageEstimate {
  std::uint64_t trials = 0;
  std::uint64_t failures_u1 = 0;
  std::uint64_t failures_u2 = 0;
  std::uint64_t both_decoded = 0;  // trials with theta = 1
  double p_hat_u1 = 0.0;
  double p_hat_u2 = 0.0;
  double ci95_u1 = 0.0;  // 1.96 sqrt(p (1 - p) / n)
  double ci95_u2 = 0.0;
  double p_theta1_hat = 0.0;
  double mean_power = 0.0;         // W
  double mean_power_stderr = 0.0;  // W, standard error of mean_power
};

double ci95_halfwidth(double p_hat, std::uint64_t trials);

// |h|^2 ~ Exp(mean sigma2), by inverse CDF.
double sample_fading_power(double sigma2, TrialStream& rng);

// Theta from the two exchange rate inequalities: both instantaneous SNRs must
// exceed the exchange threshold.
DecodeOutcome decode_outcome(double snr_12, double snr_21, double threshold);

// Runs the protocol described by `links` at the given powers. Throws
// std::invalid_argument if alloc.scheme differs from links.scheme.
OutageEstimate simulate(const SchemeLinks& links, const PowerAllocation& alloc,
                        const TrialPlan& plan);

OutageEstimate simulate_traditional(const RadioParams& radio,
                                    const Geometry& geo, const Targets& tgt,
                                    const PowerAllocation& alloc,
                                    const TrialPlan& plan);
OutageEstimate simulate_inter(const RadioParams& radio, const Geometry& geo,
                              const Targets& tgt, const PowerAllocation& alloc,
                              const TrialPlan& plan);
OutageEstimate simulate_intra(const RadioParams& radio, const Geometry& geo,
                              const Targets& tgt, const PowerAllocation& alloc,
                              const TrialPlan& plan,
                              const SchemeOptions& options = {});

}  // namespace netcoop::monte_carlo

#endif  // NETCOOP_MONTE_CARLO_HPP_
