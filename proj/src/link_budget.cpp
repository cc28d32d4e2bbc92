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

#include "netcoop/link_budget.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace netcoop::link_budget {
namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::domain_error(std::string(name) +
                            " must be positive and finite, got " +
                            std::to_string(value));
  }
}

double distance(Link link, const Geometry& geo) {
  switch (link) {
    case Link::kU1ToBs: return geo.d_1b;
    case Link::kU2ToBs: return geo.d_2b;
    case Link::kU1ToU2: return geo.d_12;
    case Link::kU2ToU1: return geo.d_21;
  }
  throw std::logic_error("unknown link");
}

struct AntennaPair {
  double tx;
  double rx;
};

AntennaPair antennas(Link link, const RadioParams& radio) {
  switch (link) {
    case Link::kU1ToBs: return {radio.g_u1, radio.g_bs};
    case Link::kU2ToBs: return {radio.g_u2, radio.g_bs};
    case Link::kU1ToU2: return {radio.g_u1, radio.g_u2};
    case Link::kU2ToU1: return {radio.g_u2, radio.g_u1};
  }
  throw std::logic_error("unknown link");
}

}  // namespace

double dbm_per_hz_to_w_per_hz(double dbm_per_hz) {
  return std::pow(10.0, (dbm_per_hz - 30.0) / 10.0);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

void RadioParams::validate() const {
  require_positive(f_c, "f_c");
  require_positive(b_c, "b_c");
  require_positive(f_s, "f_s");
  require_positive(b_s, "b_s");
  require_positive(n0, "n0");
  require_positive(g_u1, "g_u1");
  require_positive(g_u2, "g_u2");
  require_positive(g_bs, "g_bs");
  require_positive(sigma2_12, "sigma2_12");
  require_positive(sigma2_21, "sigma2_21");
  require_positive(sigma2_1b, "sigma2_1b");
  require_positive(sigma2_2b, "sigma2_2b");
}

void Geometry::validate() const {
  require_positive(d_1b, "d_1b");
  require_positive(d_2b, "d_2b");
  require_positive(d_12, "d_12");
  require_positive(d_21, "d_21");
}

Band default_band(Link link) {
  return (link == Link::kU1ToU2 || link == Link::kU2ToU1) ? Band::kShortRange
                                                          : Band::kCellular;
}

LinkGain friis_factor(double f_hz, double d_m, double g_tx, double g_rx) {
  require_positive(f_hz, "frequency");
  require_positive(d_m, "distance");
  require_positive(g_tx, "transmit gain");
  require_positive(g_rx, "receive gain");
  const double ratio = kSpeedOfLight / (4.0 * std::numbers::pi * f_hz * d_m);
  return LinkGain{ratio * ratio * g_tx * g_rx};
}

double noise_power(double n0_w_per_hz, double b_hz) {
  require_positive(n0_w_per_hz, "noise spectral density");
  require_positive(b_hz, "bandwidth");
  return n0_w_per_hz * b_hz;
}

double fading_variance(Link link, const RadioParams& radio) {
  switch (link) {
    case Link::kU1ToBs: return radio.sigma2_1b;
    case Link::kU2ToBs: return radio.sigma2_2b;
    case Link::kU1ToU2: return radio.sigma2_12;
    case Link::kU2ToU1: return radio.sigma2_21;
  }
  throw std::logic_error("unknown link");
}

double snr_per_watt_unfaded(Link link, Band band, const RadioParams& radio,
                            const Geometry& geo) {
  const bool cellular = band == Band::kCellular;
  const double f = cellular ? radio.f_c : radio.f_s;
  const double b = cellular ? radio.b_c : radio.b_s;
  const auto [g_tx, g_rx] = antennas(link, radio);
  return friis_factor(f, distance(link, geo), g_tx, g_rx).value /
         noise_power(radio.n0, b);
}

double mean_snr_per_watt(Link link, Band band, const RadioParams& radio,
                         const Geometry& geo) {
  const double sigma2 = fading_variance(link, radio);
  require_positive(sigma2, "fading variance");
  return snr_per_watt_unfaded(link, band, radio, geo) * sigma2;
}

double mean_snr_per_watt(Link link, const RadioParams& radio,
                         const Geometry& geo) {
  return mean_snr_per_watt(link, default_band(link), radio, geo);
}

}  // namespace netcoop::link_budget
