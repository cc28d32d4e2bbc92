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

#ifndef NETCOOP_CLOSED_FORM_HPP_
#define NETCOOP_CLOSED_FORM_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "netcoop/link_budget.hpp"

// Analytical outage probabilities, minimum transmit powers under a common
// target outage / target rate, and the resulting energy efficiency for
//
//   traditional : TDMA, each user talks to the base station alone;
//   inter       : users exchange packets over the short-range network, then
//                 transmit jointly (Alamouti) over the cellular band when both
//                 exchanges decoded, separately otherwise;
//   intra       : the same cooperation with the exchange also in the cellular
//                 band and the cellular phase at twice the target rate.
//
// All channels are Rayleigh, so every instantaneous SNR is exponential and
// every outage probability below is a closed-form exponential expression.

namespace netcoop::closed_form {

using link_budget::Geometry;
using link_budget::RadioParams;

struct Targets {
  double p_out = 1e-3;  // common target outage probability
  double rate = 5e6;    // common target rate, bits/s

  void validate() const;

  bool operator==(const Targets&) const = default;
};

enum class Scheme { kTraditional, kIntra, kInter };

std::string_view scheme_name(Scheme scheme);

struct SchemeOptions {
  // The intra-network exchange runs at the target rate by default; set this
  // to run it at twice the rate like the intra cellular phase.
  bool intra_exchange_double_rate = false;

  bool operator==(const SchemeOptions&) const = default;
};

// Powers in watts. Exchange powers are zero for the traditional scheme.
struct PowerAllocation {
  Scheme scheme = Scheme::kTraditional;
  double p1_exchange = 0.0;
  double p2_exchange = 0.0;
  double p1_cellular = 0.0;
  double p2_cellular = 0.0;
  double total = 0.0;
};

struct EfficiencyReport {
  Scheme scheme = Scheme::kTraditional;
  PowerAllocation allocation;
  double eta = 0.0;  // bits per joule
};

// Probability that both users decode each other's exchange packet (theta = 1)
// or not (theta = 2), when each exchange link runs at the target outage.
struct DecodePrior {
  double p_theta1;
  double p_theta2;
};

DecodePrior decode_prior(double p_out);

// Raised when the equal-means cooperative inversion has no positive solution
// in double precision. Carries the smallest target outage that does.
class InfeasibleError : public std::domain_error {
 public:
  InfeasibleError(const std::string& what, double min_feasible_p_out)
      : std::domain_error(what), min_feasible_p_out_(min_feasible_p_out) {}

  double min_feasible_p_out() const { return min_feasible_p_out_; }

 private:
  double min_feasible_p_out_;
};

// 2^(rate/bandwidth) - 1.
double rate_threshold(double rate, double bandwidth);

// P(SNR < threshold) for exponential SNR with the given mean.
double exp_outage(double mean_snr, double threshold);

// P(X1 + X2 < threshold) for i.i.d. exponential X1, X2 with the given mean.
double diversity_outage_equal_means(double mean_snr, double threshold);

// P(X1 + X2 < t) for independent exponentials with means m1 and m2.
double sum_exp_cdf_general(double m1, double m2, double t);

// Outage of one user under cooperation: Alamouti sum-SNR outage when both
// exchanges decoded (probability p_theta1), own-link outage otherwise.
double cooperative_outage(double mean_own, double mean_partner,
                          double threshold, double p_theta1);

// 1 + (1 - p_out)^2, the expected number of cellular transmissions per user
// per slot under cooperation.
double cooperative_power_weight(double p_out);

// Argument of W-1 in the cooperative power inversion:
// exp(-(1 - p)^-2) / (p - 1).
double lambert_argument(double p_out);

// Threshold-to-mean-SNR ratio t/m that makes the cooperative outage equal
// p_out when the two cellular branches have equal means:
// -(1 - p)^-2 - W-1(lambert_argument(p)).
//
// Only the lower branch gives a positive ratio. On the principal branch W lies
// in (-1, 0) while (1 - p)^-2 > 1, so the ratio would be negative.
//
// Throws InfeasibleError when the computed ratio is not positive.
double normalized_cooperative_threshold(double p_out);

// Smallest target outage for which normalized_cooperative_threshold is
// positive in double precision (found once by bisection in log10(p)).
double min_feasible_p_out();

// Per-scheme SNR coefficients and rate thresholds. `exchange_*` and
// `cellular_*` are mean SNR per watt (fading variance folded in).
struct SchemeLinks {
  Scheme scheme;
  double exchange_12 = 0.0;
  double exchange_21 = 0.0;
  double cellular_1b = 0.0;
  double cellular_2b = 0.0;
  double exchange_threshold = 0.0;
  double cellular_threshold = 0.0;
  // Mean-square fading gains, for samplers that draw |h|^2 directly.
  double sigma2_12 = 1.0;
  double sigma2_21 = 1.0;
  double sigma2_1b = 1.0;
  double sigma2_2b = 1.0;
};

SchemeLinks scheme_links(Scheme scheme, const RadioParams& radio,
                         const Geometry& geo, const Targets& tgt,
                         const SchemeOptions& options = {});

PowerAllocation traditional_powers(const RadioParams& radio,
                                   const Geometry& geo, const Targets& tgt);
EfficiencyReport traditional_efficiency(const RadioParams& radio,
                                        const Geometry& geo,
                                        const Targets& tgt);

// (P_1s, P_2s): short-range exchange powers meeting the target outage.
std::pair<double, double> inter_exchange_powers(const RadioParams& radio,
                                                const Geometry& geo,
                                                const Targets& tgt);

// (P_1c, P_2c): cellular powers that equalize the two Alamouti branch means
// and meet the target outage for both users.
std::pair<double, double> inter_cellular_powers(const RadioParams& radio,
                                                const Geometry& geo,
                                                const Targets& tgt);

PowerAllocation inter_total_power(const RadioParams& radio,
                                  const Geometry& geo, const Targets& tgt);
EfficiencyReport inter_efficiency(const RadioParams& radio,
                                  const Geometry& geo, const Targets& tgt);

PowerAllocation intra_powers(const RadioParams& radio, const Geometry& geo,
                             const Targets& tgt,
                             const SchemeOptions& options = {});
EfficiencyReport intra_powers_and_efficiency(const RadioParams& radio,
                                             const Geometry& geo,
                                             const Targets& tgt,
                                             const SchemeOptions& options = {});

PowerAllocation scheme_powers(Scheme scheme, const RadioParams& radio,
                              const Geometry& geo, const Targets& tgt,
                              const SchemeOptions& options = {});
EfficiencyReport scheme_efficiency(Scheme scheme, const RadioParams& radio,
                                   const Geometry& geo, const Targets& tgt,
                                   const SchemeOptions& options = {});

// Sum of exchange powers plus the cooperative weight times the cellular sum;
// plain sum of the two cellular powers for the traditional scheme.
double aggregate_total(const PowerAllocation& alloc, double p_out);

struct UserOutage {
  double u1;
  double u2;
  double p_theta1;  // 1 for the traditional scheme (unused there)
};

// Outage of each user evaluated at arbitrary powers. For the cooperative
// schemes the decode probability comes from the supplied exchange powers and
// the Alamouti branch uses the unequal-means CDF, so this is an independent
// route back to the target.
UserOutage analytic_outage(const SchemeLinks& links,
                           const PowerAllocation& alloc);

}  // namespace netcoop::closed_form

#endif  // NETCOOP_CLOSED_FORM_HPP_
