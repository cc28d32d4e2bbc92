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

#include "netcoop/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace netcoop::monte_carlo {
namespace {

using closed_form::Scheme;

struct ChunkCounts {
  std::uint64_t failures_u1 = 0;
  std::uint64_t failures_u2 = 0;
  std::uint64_t both_decoded = 0;
};

// SNR per watt with the fading gain excluded; the sampled |h|^2 supplies it.
struct Coefficients {
  double exchange_12;
  double exchange_21;
  double cellular_1b;
  double cellular_2b;
};

Coefficients unfaded(const SchemeLinks& links) {
  return {links.exchange_12 / links.sigma2_12,
          links.exchange_21 / links.sigma2_21,
          links.cellular_1b / links.sigma2_1b,
          links.cellular_2b / links.sigma2_2b};
}

ChunkCounts run_chunk(const SchemeLinks& links, const Coefficients& coef,
                      const PowerAllocation& alloc, std::uint64_t seed,
                      std::uint64_t begin, std::uint64_t end) {
  ChunkCounts counts;
  const bool cooperative = links.scheme != Scheme::kTraditional;
  const double t_cell = links.cellular_threshold;
  const double t_ex = links.exchange_threshold;
  const double a1 = alloc.p1_cellular * coef.cellular_1b;
  const double a2 = alloc.p2_cellular * coef.cellular_2b;
  const double e12 = alloc.p1_exchange * coef.exchange_12;
  const double e21 = alloc.p2_exchange * coef.exchange_21;

  for (std::uint64_t trial = begin; trial < end; ++trial) {
    TrialStream rng(seed, trial);
    const double h12 = sample_fading_power(links.sigma2_12, rng);
    const double h21 = sample_fading_power(links.sigma2_21, rng);
    const double h1b = sample_fading_power(links.sigma2_1b, rng);
    const double h2b = sample_fading_power(links.sigma2_2b, rng);

    const double snr1 = a1 * h1b;
    const double snr2 = a2 * h2b;
    if (cooperative &&
        decode_outcome(e12 * h12, e21 * h21, t_ex) ==
            DecodeOutcome::kBothDecoded) {
      ++counts.both_decoded;
      // Alamouti: both symbols see the summed branch SNR.
      if (snr1 + snr2 < t_cell) {
        ++counts.failures_u1;
        ++counts.failures_u2;
      }
      continue;
    }
    if (snr1 < t_cell) ++counts.failures_u1;
    if (snr2 < t_cell) ++counts.failures_u2;
  }
  return counts;
}

void require_scheme(const PowerAllocation& alloc, Scheme expected) {
  if (alloc.scheme != expected) {
    throw std::invalid_argument(
        "allocation is for scheme '" +
        std::string(closed_form::scheme_name(alloc.scheme)) +
        "' but the simulator expects '" +
        std::string(closed_form::scheme_name(expected)) + "'");
  }
}

}  // namespace

void TrialPlan::validate() const {
  if (n_trials < 1) throw std::invalid_argument("n_trials must be >= 1");
  if (chunk_size < 1) throw std::invalid_argument("chunk_size must be >= 1");
}

double ci95_halfwidth(double p_hat, std::uint64_t trials) {
  return 1.96 * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(trials));
}

double sample_fading_power(double sigma2, TrialStream& rng) {
  return -sigma2 * std::log(rng.next_uniform());
}

DecodeOutcome decode_outcome(double snr_12, double snr_21, double threshold) {
  return (snr_12 > threshold && snr_21 > threshold)
             ? DecodeOutcome::kBothDecoded
             : DecodeOutcome::kFallback;
}

OutageEstimate simulate(const SchemeLinks& links, const PowerAllocation& alloc,
                        const TrialPlan& plan) {
  plan.validate();
  require_scheme(alloc, links.scheme);

  const Coefficients coef = unfaded(links);
  const std::uint64_t n_chunks =
      (plan.n_trials + plan.chunk_size - 1) / plan.chunk_size;
  std::vector<ChunkCounts> per_chunk(n_chunks);

  unsigned threads =
      plan.threads ? plan.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, n_chunks));

  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < n_chunks; c = next++) {
      const std::uint64_t begin = c * plan.chunk_size;
      const std::uint64_t end = std::min(plan.n_trials, begin + plan.chunk_size);
      per_chunk[c] = run_chunk(links, coef, alloc, plan.seed, begin, end);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  OutageEstimate est;
  est.trials = plan.n_trials;
  for (const ChunkCounts& c : per_chunk) {
    est.failures_u1 += c.failures_u1;
    est.failures_u2 += c.failures_u2;
    est.both_decoded += c.both_decoded;
  }
  const auto n = static_cast<double>(est.trials);
  est.p_hat_u1 = static_cast<double>(est.failures_u1) / n;
  est.p_hat_u2 = static_cast<double>(est.failures_u2) / n;
  est.ci95_u1 = ci95_halfwidth(est.p_hat_u1, est.trials);
  est.ci95_u2 = ci95_halfwidth(est.p_hat_u2, est.trials);

  const double cellular = alloc.p1_cellular + alloc.p2_cellular;
  if (links.scheme == Scheme::kTraditional) {
    est.p_theta1_hat = 0.0;
    est.mean_power = cellular;
    est.mean_power_stderr = 0.0;
  } else {
    // Per-trial power is exchange + cellular (theta = 2) or
    // exchange + 2 cellular (theta = 1), so the mean follows from the count.
    const double q = static_cast<double>(est.both_decoded) / n;
    est.p_theta1_hat = q;
    est.mean_power = alloc.p1_exchange + alloc.p2_exchange +
                     cellular * (static_cast<double>(est.trials + est.both_decoded) / n);
    est.mean_power_stderr = cellular * std::sqrt(q * (1.0 - q) / n);
  }
  return est;
}

OutageEstimate simulate_traditional(const RadioParams& radio,
                                    const Geometry& geo, const Targets& tgt,
                                    const PowerAllocation& alloc,
                                    const TrialPlan& plan) {
  require_scheme(alloc, Scheme::kTraditional);
  return simulate(
      closed_form::scheme_links(Scheme::kTraditional, radio, geo, tgt), alloc,
      plan);
}

OutageEstimate simulate_inter(const RadioParams& radio, const Geometry& geo,
                              const Targets& tgt, const PowerAllocation& alloc,
                              const TrialPlan& plan) {
  require_scheme(alloc, Scheme::kInter);
  return simulate(closed_form::scheme_links(Scheme::kInter, radio, geo, tgt),
                  alloc, plan);
}

OutageEstimate simulate_intra(const RadioParams& radio, const Geometry& geo,
                              const Targets& tgt, const PowerAllocation& alloc,
                              const TrialPlan& plan,
                              const SchemeOptions& options) {
  require_scheme(alloc, Scheme::kIntra);
  return simulate(
      closed_form::scheme_links(Scheme::kIntra, radio, geo, tgt, options),
      alloc, plan);
}

}  // namespace netcoop::monte_carlo
