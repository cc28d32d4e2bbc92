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

#ifndef NETCOOP_SCENARIO_HPP_
#define NETCOOP_SCENARIO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "netcoop/closed_form.hpp"
#include "netcoop/link_budget.hpp"

// Scenario configuration files: flat `key = value` lines, `#` starts a
// comment. Absent keys keep their defaults; d_21_m follows d_12_m unless set.
//
//   f_c_hz f_s_hz b_c_hz b_s_hz       carriers and bandwidths (Hz)
//   n0_dbm_hz                         noise spectral density (dBm/Hz)
//   g_u1_dbi g_u2_dbi g_bs_dbi        antenna gains (dBi)
//   sigma2_12 sigma2_21 sigma2_1b sigma2_2b   mean-square fading gains
//   d_1b_m d_2b_m d_12_m d_21_m       distances (m)
//   pout_target rate_bps              common targets
//   intra_exchange_double_rate        true/false

namespace netcoop::scenario {

struct ScenarioConfig {
  link_budget::RadioParams radio;
  link_budget::Geometry geo;
  closed_form::Targets tgt;
  closed_form::SchemeOptions options;

  bool operator==(const ScenarioConfig&) const = default;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& what, int line, std::string key)
      : std::runtime_error(what), line_(line), key_(std::move(key)) {}

  int line() const { return line_; }  // 0 when not tied to a line
  const std::string& key() const { return key_; }

 private:
  int line_;
  std::string key_;
};

ScenarioConfig parse_config(std::string_view text);
ScenarioConfig load_config(const std::string& path);

// Emits every key, so parse_config(to_config_text(c)) reproduces c (dB
// fields up to the rounding of the dB <-> linear conversion).
std::string to_config_text(const ScenarioConfig& cfg);

}  // namespace netcoop::scenario

#endif  // NETCOOP_SCENARIO_HPP_
