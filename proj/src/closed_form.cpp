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

#include "netcoop/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "netcoop/lambert_w.hpp"

namespace netcoop::closed_form {
namespace {

using link_budget::Band;
using link_budget::Link;
using link_budget::mean_snr_per_watt;

constexpr double kEqualMeansRelTol = 1e-9;

void require(bool ok, const std::string& message) {
  if (!ok) throw std::domain_error(message);
}

// -log(1 - p): the normalized threshold of a single exponential link at
// outage p.
double single_link_factor(double p_out) { return -std::log1p(-p_out); }

// expm1(d) / d, continuous at 0.
double expm1_ratio(double d) {
  if (std::abs(d) < 1e-300) return 1.0;
  return std::expm1(d) / d;
}

// Power that brings a link with `mean_per_watt` to a mean SNR of
// threshold / factor.
double invert(double threshold, double mean_per_watt, double factor) {
  return threshold / (mean_per_watt * factor);
}

// Outage at a given power; zero power never clears a positive threshold.
double outage_at(double power, double mean_per_watt, double threshold) {
  if (threshold <= 0.0) return 0.0;
  if (!(power > 0.0)) return 1.0;
  return exp_outage(power * mean_per_watt, threshold);
}

EfficiencyReport make_report(const PowerAllocation& alloc, double rate) {
  return EfficiencyReport{alloc.scheme, alloc, rate / alloc.total};
}

}  // namespace

void Targets::validate() const {
  require(p_out > 0.0 && p_out < 1.0,
          "pout_target must lie in (0, 1), got " + std::to_string(p_out));
  require(rate > 0.0 && std::isfinite(rate),
          "rate_bps must be positive, got " + std::to_string(rate));
}

std::string_view scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::kTraditional: return "traditional";
    case Scheme::kIntra: return "intra";
    case Scheme::kInter: return "inter";
  }
  return "unknown";
}

DecodePrior decode_prior(double p_out) {
  const double both = (1.0 - p_out) * (1.0 - p_out);
  return DecodePrior{both, 1.0 - both};
}

double rate_threshold(double rate, double bandwidth) {
  require(rate >= 0.0, "rate must be non-negative");
  require(bandwidth > 0.0, "bandwidth must be positive");
  return std::expm1(rate / bandwidth * std::numbers::ln2);
}

double exp_outage(double mean_snr, double threshold) {
  require(mean_snr > 0.0, "mean SNR must be positive");
  require(threshold >= 0.0, "threshold must be non-negative");
  return -std::expm1(-threshold / mean_snr);
}

double diversity_outage_equal_means(double mean_snr, double threshold) {
  require(mean_snr > 0.0, "mean SNR must be positive");
  require(threshold >= 0.0, "threshold must be non-negative");
  if (std::isinf(threshold)) return 1.0;
  const double x = threshold / mean_snr;
  // 1 - (1 + x) e^-x
  return -std::expm1(std::log1p(x) - x);
}

double sum_exp_cdf_general(double m1, double m2, double t) {
  require(m1 > 0.0 && m2 > 0.0, "means must be positive");
  require(t > 0.0, "threshold must be positive");
  if (std::isinf(t)) return 1.0;
  if (m1 > m2) std::swap(m1, m2);
  if (m2 - m1 <= kEqualMeansRelTol * m2) {
    // The midpoint cancels the first-order error in (m2 - m1).
    return diversity_outage_equal_means(0.5 * (m1 + m2), t);
  }
  // 1 - (m1 e^{-t/m1} - m2 e^{-t/m2}) / (m1 - m2)
  //   = 1 - e^{-t/m2} (1 + (t/m2) expm1(d)/d),  d = t (m1 - m2) / (m1 m2),
  // which stays accurate as m1 -> m2 and for small t.
  const double t_over_m2 = t / m2;
  const double d = t_over_m2 * ((m1 - m2) / m1);
  return -std::expm1(-t_over_m2 + std::log1p(t_over_m2 * expm1_ratio(d)));
}

double cooperative_outage(double mean_own, double mean_partner,
                          double threshold, double p_theta1) {
  if (threshold <= 0.0) return 0.0;
  const double alone = exp_outage(mean_own, threshold);
  const double joint = sum_exp_cdf_general(mean_own, mean_partner, threshold);
  return p_theta1 * joint + (1.0 - p_theta1) * alone;
}

double cooperative_power_weight(double p_out) {
  return 1.0 + decode_prior(p_out).p_theta1;
}

double lambert_argument(double p_out) {
  const double inv_q = 1.0 / ((1.0 - p_out) * (1.0 - p_out));
  return -std::exp(-inv_q - std::log1p(-p_out));
}

double normalized_cooperative_threshold(double p_out) {
  require(p_out > 0.0 && p_out < 1.0, "target outage must lie in (0, 1)");
  const double inv_q = 1.0 / ((1.0 - p_out) * (1.0 - p_out));
  const double arg = lambert_argument(p_out);
  double ratio = -1.0;
  if (special::branch_point_offset(arg) >= 0.0 ||
      -special::kInverseE - arg <= special::kBranchPointSnap) {
    ratio = -inv_q - special::lambert_wm1(arg);
  }
  if (!(ratio > 0.0) || !std::isfinite(ratio)) {
    const double limit = min_feasible_p_out();
    throw InfeasibleError(
        "cooperative power inversion infeasible at target outage " +
            std::to_string(p_out) + "; smallest feasible target outage is " +
            std::to_string(limit),
        limit);
  }
  return ratio;
}

double min_feasible_p_out() {
  static const double limit = [] {
    auto feasible = [](double p) {
      const double arg = lambert_argument(p);
      if (special::branch_point_offset(arg) < 0.0 &&
          -special::kInverseE - arg > special::kBranchPointSnap) {
        return false;
      }
      const double inv_q = 1.0 / ((1.0 - p) * (1.0 - p));
      return -inv_q - special::lambert_wm1(arg) > 0.0;
    };
    double lo = -40.0;  // log10 p, infeasible
    double hi = -1.0;   // log10 p, feasible
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
      const double mid = 0.5 * (lo + hi);
      (feasible(std::pow(10.0, mid)) ? hi : lo) = mid;
    }
    return std::pow(10.0, hi);
  }();
  return limit;
}

SchemeLinks scheme_links(Scheme scheme, const RadioParams& radio,
                         const Geometry& geo, const Targets& tgt,
                         const SchemeOptions& options) {
  radio.validate();
  geo.validate();
  tgt.validate();
  SchemeLinks links{scheme};
  links.sigma2_12 = radio.sigma2_12;
  links.sigma2_21 = radio.sigma2_21;
  links.sigma2_1b = radio.sigma2_1b;
  links.sigma2_2b = radio.sigma2_2b;
  links.cellular_1b = mean_snr_per_watt(Link::kU1ToBs, radio, geo);
  links.cellular_2b = mean_snr_per_watt(Link::kU2ToBs, radio, geo);
  switch (scheme) {
    case Scheme::kTraditional:
      links.cellular_threshold = rate_threshold(tgt.rate, radio.b_c);
      break;
    case Scheme::kInter:
      links.exchange_12 =
          mean_snr_per_watt(Link::kU1ToU2, Band::kShortRange, radio, geo);
      links.exchange_21 =
          mean_snr_per_watt(Link::kU2ToU1, Band::kShortRange, radio, geo);
      links.exchange_threshold = rate_threshold(tgt.rate, radio.b_s);
      links.cellular_threshold = rate_threshold(tgt.rate, radio.b_c);
      break;
    case Scheme::kIntra: {
      links.exchange_12 =
          mean_snr_per_watt(Link::kU1ToU2, Band::kCellular, radio, geo);
      links.exchange_21 =
          mean_snr_per_watt(Link::kU2ToU1, Band::kCellular, radio, geo);
      const double exchange_rate =
          options.intra_exchange_double_rate ? 2.0 * tgt.rate : tgt.rate;
      links.exchange_threshold = rate_threshold(exchange_rate, radio.b_c);
      links.cellular_threshold = rate_threshold(2.0 * tgt.rate, radio.b_c);
      break;
    }
  }
  return links;
}

double aggregate_total(const PowerAllocation& alloc, double p_out) {
  if (alloc.scheme == Scheme::kTraditional) {
    return alloc.p1_cellular + alloc.p2_cellular;
  }
  return alloc.p1_exchange + alloc.p2_exchange +
         cooperative_power_weight(p_out) *
             (alloc.p1_cellular + alloc.p2_cellular);
}

namespace {

PowerAllocation cooperative_allocation(const SchemeLinks& links,
                                       const Targets& tgt) {
  const double single = single_link_factor(tgt.p_out);
  const double joint = normalized_cooperative_threshold(tgt.p_out);
  PowerAllocation alloc;
  alloc.scheme = links.scheme;
  alloc.p1_exchange = invert(links.exchange_threshold, links.exchange_12, single);
  alloc.p2_exchange = invert(links.exchange_threshold, links.exchange_21, single);
  alloc.p1_cellular = invert(links.cellular_threshold, links.cellular_1b, joint);
  alloc.p2_cellular = invert(links.cellular_threshold, links.cellular_2b, joint);
  alloc.total = aggregate_total(alloc, tgt.p_out);
  return alloc;
}

}  // namespace

PowerAllocation traditional_powers(const RadioParams& radio,
                                   const Geometry& geo, const Targets& tgt) {
  const SchemeLinks links =
      scheme_links(Scheme::kTraditional, radio, geo, tgt);
  const double single = single_link_factor(tgt.p_out);
  PowerAllocation alloc;
  alloc.scheme = Scheme::kTraditional;
  alloc.p1_cellular = invert(links.cellular_threshold, links.cellular_1b, single);
  alloc.p2_cellular = invert(links.cellular_threshold, links.cellular_2b, single);
  alloc.total = aggregate_total(alloc, tgt.p_out);
  return alloc;
}

EfficiencyReport traditional_efficiency(const RadioParams& radio,
                                        const Geometry& geo,
                                        const Targets& tgt) {
  return make_report(traditional_powers(radio, geo, tgt), tgt.rate);
}

std::pair<double, double> inter_exchange_powers(const RadioParams& radio,
                                                const Geometry& geo,
                                                const Targets& tgt) {
  const SchemeLinks links = scheme_links(Scheme::kInter, radio, geo, tgt);
  const double single = single_link_factor(tgt.p_out);
  return {invert(links.exchange_threshold, links.exchange_12, single),
          invert(links.exchange_threshold, links.exchange_21, single)};
}

std::pair<double, double> inter_cellular_powers(const RadioParams& radio,
                                                const Geometry& geo,
                                                const Targets& tgt) {
  const SchemeLinks links = scheme_links(Scheme::kInter, radio, geo, tgt);
  const double joint = normalized_cooperative_threshold(tgt.p_out);
  return {invert(links.cellular_threshold, links.cellular_1b, joint),
          invert(links.cellular_threshold, links.cellular_2b, joint)};
}

PowerAllocation inter_total_power(const RadioParams& radio,
                                  const Geometry& geo, const Targets& tgt) {
  return cooperative_allocation(scheme_links(Scheme::kInter, radio, geo, tgt),
                                tgt);
}

EfficiencyReport inter_efficiency(const RadioParams& radio,
                                  const Geometry& geo, const Targets& tgt) {
  return make_report(inter_total_power(radio, geo, tgt), tgt.rate);
}

PowerAllocation intra_powers(const RadioParams& radio, const Geometry& geo,
                             const Targets& tgt, const SchemeOptions& options) {
  return cooperative_allocation(
      scheme_links(Scheme::kIntra, radio, geo, tgt, options), tgt);
}

EfficiencyReport intra_powers_and_efficiency(const RadioParams& radio,
                                             const Geometry& geo,
                                             const Targets& tgt,
                                             const SchemeOptions& options) {
  return make_report(intra_powers(radio, geo, tgt, options), tgt.rate);
}

PowerAllocation scheme_powers(Scheme scheme, const RadioParams& radio,
                              const Geometry& geo, const Targets& tgt,
                              const SchemeOptions& options) {
  switch (scheme) {
    case Scheme::kTraditional: return traditional_powers(radio, geo, tgt);
    case Scheme::kInter: return inter_total_power(radio, geo, tgt);
    case Scheme::kIntra: return intra_powers(radio, geo, tgt, options);
  }
  throw std::logic_error("unknown scheme");
}

EfficiencyReport scheme_efficiency(Scheme scheme, const RadioParams& radio,
                                   const Geometry& geo, const Targets& tgt,
                                   const SchemeOptions& options) {
  return make_report(scheme_powers(scheme, radio, geo, tgt, options), tgt.rate);
}

UserOutage analytic_outage(const SchemeLinks& links,
                           const PowerAllocation& alloc) {
  const double t = links.cellular_threshold;
  if (links.scheme == Scheme::kTraditional) {
    return UserOutage{outage_at(alloc.p1_cellular, links.cellular_1b, t),
                      outage_at(alloc.p2_cellular, links.cellular_2b, t), 1.0};
  }
  const double decoded_12 =
      1.0 - outage_at(alloc.p1_exchange, links.exchange_12,
                      links.exchange_threshold);
  const double decoded_21 =
      1.0 - outage_at(alloc.p2_exchange, links.exchange_21,
                      links.exchange_threshold);
  const double p_theta1 = decoded_12 * decoded_21;

  const double m1 = alloc.p1_cellular * links.cellular_1b;
  const double m2 = alloc.p2_cellular * links.cellular_2b;
  auto user = [&](double own, double partner) {
    if (t <= 0.0) return 0.0;
    if (!(own > 0.0) && !(partner > 0.0)) return 1.0;
    const double alone = own > 0.0 ? exp_outage(own, t) : 1.0;
    double joint;
    if (own > 0.0 && partner > 0.0) {
      joint = sum_exp_cdf_general(own, partner, t);
    } else {
      joint = exp_outage(own > 0.0 ? own : partner, t);
    }
    return p_theta1 * joint + (1.0 - p_theta1) * alone;
  };
  return UserOutage{user(m1, m2), user(m2, m1), p_theta1};
}

}  // namespace netcoop::closed_form
