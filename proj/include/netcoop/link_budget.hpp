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

#ifndef NETCOOP_LINK_BUDGET_HPP_
#define NETCOOP_LINK_BUDGET_HPP_

// Free-space link budget for the two-user uplink: deterministic received-power
// factors, thermal noise and mean received SNR per watt of transmit power.
// Everything here is strict SI; dB conversions belong to the configuration
// layer.

namespace netcoop::link_budget {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s, exact

double dbm_per_hz_to_w_per_hz(double dbm_per_hz);
double db_to_linear(double db);
double linear_to_db(double linear);

struct RadioParams {
  double f_c = 1.8e9;   // cellular carrier, Hz
  double b_c = 1.4e6;   // cellular bandwidth, Hz
  double f_s = 2.4e9;   // short-range (ISM) carrier, Hz
  double b_s = 20.0e6;  // short-range bandwidth, Hz
  double n0 = dbm_per_hz_to_w_per_hz(-174.0);  // W/Hz
  double g_u1 = 1.0;
  double g_u2 = 1.0;
  double g_bs = 1.0;
  double sigma2_12 = 1.0;
  double sigma2_21 = 1.0;
  double sigma2_1b = 1.0;
  double sigma2_2b = 1.0;

  // Throws std::domain_error naming the first non-positive field.
  void validate() const;

  bool operator==(const RadioParams&) const = default;
};

// Distances in meters.
struct Geometry {
  double d_1b = 1000.0;
  double d_2b = 1000.0;
  double d_12 = 20.0;
  double d_21 = 20.0;

  void validate() const;

  bool operator==(const Geometry&) const = default;
};

// Received power per unit transmit power, fading excluded.
struct LinkGain {
  double value;
};

enum class Link { kU1ToBs, kU2ToBs, kU1ToU2, kU2ToU1 };

// Which carrier/bandwidth pair a link is evaluated in. Cross-user links use
// the short-range band unless the caller asks for the cellular band (as the
// intra-network exchange does).
enum class Band { kCellular, kShortRange };

Band default_band(Link link);

// (c / (4 pi f d))^2 * g_tx * g_rx.
LinkGain friis_factor(double f_hz, double d_m, double g_tx, double g_rx);

double noise_power(double n0_w_per_hz, double b_hz);

// SNR per watt with unit-mean fading: friis_factor / (N0 B). Multiply by the
// instantaneous |h|^2 to get the faded SNR.
double snr_per_watt_unfaded(Link link, Band band, const RadioParams& radio,
                            const Geometry& geo);

// Mean SNR per watt, i.e. the unfaded coefficient times the link's
// mean-square fading gain.
double mean_snr_per_watt(Link link, const RadioParams& radio,
                         const Geometry& geo);
double mean_snr_per_watt(Link link, Band band, const RadioParams& radio,
                         const Geometry& geo);

double fading_variance(Link link, const RadioParams& radio);

}  // namespace netcoop::link_budget

#endif  // NETCOOP_LINK_BUDGET_HPP_
