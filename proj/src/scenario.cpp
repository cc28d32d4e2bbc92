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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <vector>

#include "netcoop/report.hpp"

namespace netcoop::scenario {
namespace {

using link_budget::db_to_linear;
using link_budget::dbm_per_hz_to_w_per_hz;
using link_budget::linear_to_db;

enum class Check { kPositive, kFinite, kProbability };

struct NumericKey {
  std::string_view name;
  Check check;
  std::function<void(ScenarioConfig&, double)> apply;
  std::function<double(const ScenarioConfig&)> read;
};

const std::vector<NumericKey>& numeric_keys() {
  static const std::vector<NumericKey> keys = {
      {"f_c_hz", Check::kPositive,
       [](ScenarioConfig& c, double v) { c.radio.f_c = v; },
       [](const ScenarioConfig& c) { return c.radio.f_c; }},
      {"f_s_hz", Check::kPositive,
       [](ScenarioConfig& c, double v) { c.radio.f_s = v; },
       [](const ScenarioConfig& c) { return c.radio.f_s; }},
      {"b_c_hz", Check::kPositive,
       [](ScenarioConfig& c, double v) { c.radio.b_c = v; },
       [](const ScenarioConfig& c) { return c.radio.b_c; }},
      {"b_s_hz", Check::kPositive,
       [](ScenarioConfig& c, double v) { c.radio.b_s = v; },
       [](const ScenarioConfig& c) { return c.radio.b_s; }},
      {"n0_dbm_hz", Check::kFinite,
       [](ScenarioConfig& c, double v) { c.radio.n0 = dbm_per_hz_to_w_per_hz(v); },
       [](const ScenarioConfig& c) { return linear_to_db(c.radio.n0) + 30.0; }},
      {"g_u1_dbi", Check::kFinite,
       [](ScenarioConfig& c, double v) { c.radio.g_u1 = db_to_linear(v); },
       [](const ScenarioConfig& c) { return linear_to_db(c.radio.g_u1); }},
      {"g_u2_dbi", Check::kFinite,
       [](ScenarioConfig& c, double v) { c.radio.g_u2 = db_to_linear(v); },
       [](const ScenarioConfig& c) { return linear_to_db(c.radio.g_u2); }},
      {"g_bs_dbi", Check::kFinite,
       [](ScenarioConfig& c, double v) { c.radio.g_bs = db_to_linear(v); },
       [](const ScenarioConfig& c) { return linear_to_db(c.radio.g_bs); }},
      {"sigma2_12", Check::kPositive,
       [](ScenarioConfig& c, double v) { c.radio.sigma2_12 = v; },
       [](const ScenarioConfig& c) { return c.radio.sigma2_12; }},
      {"sigma2_21", Check::kPositive,
       [](ScenarioConfig& c, double v) { c.radio.sigma2_21 = v; },
       [](const ScenarioConfig& c) { return c.radio.sigma2_21; }},
      {"sigma2_1b", Check::kPositive,
       [](ScenarioConfig& c, double v) { c.radio.sigma2_1b = v; },
       [](const ScenarioConfig& c) { return c.radio.sigma2_1b; }},
      {"sigma2_2b", Check::kPositive,
       [](ScenarioConfig& c, double v) { c.radio.sigma2_2b = v; },
       [](const ScenarioConfig& c) { return c.radio.sigma2_2b; }},
      {"d_1b_m", Check::kPositive,
       [](ScenarioConfig& c, double v) { c.geo.d_1b = v; },
       [](const ScenarioConfig& c) { return c.geo.d_1b; }},
      {"d_2b_m", Check::kPositive,
       [](ScenarioConfig& c, double v) { c.geo.d_2b = v; },
       [](const ScenarioConfig& c) { return c.geo.d_2b; }},
      {"d_12_m", Check::kPositive,
       [](ScenarioConfig& c, double v) { c.geo.d_12 = v; },
       [](const ScenarioConfig& c) { return c.geo.d_12; }},
      {"d_21_m", Check::kPositive,
       [](ScenarioConfig& c, double v) { c.geo.d_21 = v; },
       [](const ScenarioConfig& c) { return c.geo.d_21; }},
      {"pout_target", Check::kProbability,
       [](ScenarioConfig& c, double v) { c.tgt.p_out = v; },
       [](const ScenarioConfig& c) { return c.tgt.p_out; }},
      {"rate_bps", Check::kPositive,
       [](ScenarioConfig& c, double v) { c.tgt.rate = v; },
       [](const ScenarioConfig& c) { return c.tgt.rate; }},
  };
  return keys;
}

constexpr std::string_view kDoubleRateKey = "intra_exchange_double_rate";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line, std::string_view key, const std::string& msg) {
  std::ostringstream os;
  os << "config line " << line;
  if (!key.empty()) os << ", key '" << key << "'";
  os << ": " << msg;
  throw ConfigError(os.str(), line, std::string(key));
}

double parse_number(int line, std::string_view key, std::string_view value) {
  double v = 0.0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    fail(line, key, "not a number: '" + std::string(value) + "'");
  }
  return v;
}

bool parse_bool(int line, std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  fail(line, key, "expected true or false, got '" + std::string(value) + "'");
}

void check_value(int line, const NumericKey& key, double v) {
  switch (key.check) {
    case Check::kPositive:
      if (!(v > 0.0) || !std::isfinite(v)) {
        fail(line, key.name, "must be positive and finite");
      }
      break;
    case Check::kFinite:
      if (!std::isfinite(v)) fail(line, key.name, "must be finite");
      break;
    case Check::kProbability:
      if (!(v > 0.0 && v < 1.0)) fail(line, key.name, "must lie in (0, 1)");
      break;
  }
}

}  // namespace

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig cfg;
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail(line_no, {}, "expected 'key = value'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) fail(line_no, {}, "missing key");
    if (value.empty()) fail(line_no, key, "missing value");
    if (!seen.emplace(key).second) fail(line_no, key, "duplicate key");

    if (key == kDoubleRateKey) {
      cfg.options.intra_exchange_double_rate = parse_bool(line_no, key, value);
      continue;
    }
    const auto& keys = numeric_keys();
    const auto it = std::find_if(keys.begin(), keys.end(),
                                 [&](const NumericKey& k) { return k.name == key; });
    if (it == keys.end()) fail(line_no, key, "unknown key");
    const double v = parse_number(line_no, key, value);
    check_value(line_no, *it, v);
    it->apply(cfg, v);
  }
  if (!seen.contains("d_21_m")) cfg.geo.d_21 = cfg.geo.d_12;
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'", 0, {});
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string to_config_text(const ScenarioConfig& cfg) {
  std::string out;
  for (const NumericKey& key : numeric_keys()) {
    out += key.name;
    out += " = ";
    out += report::format_double(key.read(cfg));
    out += '\n';
  }
  out += kDoubleRateKey;
  out += cfg.options.intra_exchange_double_rate ? " = true\n" : " = false\n";
  return out;
}

}  // namespace netcoop::scenario
