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

#include "netcoop/report.hpp"

#include <array>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>

#include "json.hpp"

namespace netcoop::report {
namespace {

using nlohmann::json;

std::string optional_field(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string{};
}

std::string finite_field(double v) {
  return std::isfinite(v) ? format_double(v) : std::string{};
}

const char* flag(bool b) { return b ? "true" : "false"; }

json optional_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json finite_json(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = line.find(sep);
    out.push_back(line.substr(0, pos));
    if (pos == std::string_view::npos) break;
    line.remove_prefix(pos + 1);
  }
  return out;
}

double parse_field(std::string_view s, int line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::runtime_error("sweep csv line " + std::to_string(line) +
                             ": bad number '" + std::string(s) + "'");
  }
  return v;
}

bool parse_flag(std::string_view s, int line) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw std::runtime_error("sweep csv line " + std::to_string(line) +
                           ": bad flag '" + std::string(s) + "'");
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw std::runtime_error("float formatting failed");
  return std::string(buf.data(), ptr);
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out(kSweepHeader);
  out += '\n';
  for (const SweepRow& r : rows) {
    out += format_double(r.swept_m) + ',' + optional_field(r.eta_traditional) +
           ',' + optional_field(r.eta_intra) + ',' +
           optional_field(r.eta_inter) + ',' + flag(r.eta_traditional.has_value()) +
           ',' + flag(r.eta_intra.has_value()) + ',' +
           flag(r.eta_inter.has_value()) + '\n';
  }
  return out;
}

std::string verify_csv(const std::vector<VerifyRow>& rows) {
  std::string out(kVerifyHeader);
  out += '\n';
  for (const VerifyRow& r : rows) {
    out += std::string(closed_form::scheme_name(r.scheme)) + ',' +
           std::to_string(r.user) + ',' + finite_field(r.p_target) + ',' +
           finite_field(r.p_mc) + ',' + finite_field(r.ci95) + ',' +
           finite_field(r.power_analytic_w) + ',' +
           finite_field(r.power_mc_w) + ',' +
           std::string(scenario::status_name(r.status)) + '\n';
  }
  return out;
}

std::string analyze_csv(const std::vector<SchemeResult>& results) {
  std::string out(kAnalyzeHeader);
  out += '\n';
  for (const SchemeResult& r : results) {
    out += std::string(closed_form::scheme_name(r.scheme));
    if (r.report) {
      const auto& a = r.report->allocation;
      for (double v : {a.p1_exchange, a.p2_exchange, a.p1_cellular,
                       a.p2_cellular, a.total, r.report->eta}) {
        out += ',' + format_double(v);
      }
      out += ",true\n";
    } else {
      out += ",,,,,,,false\n";
    }
  }
  return out;
}

std::string sweep_json(const std::vector<SweepRow>& rows) {
  json arr = json::array();
  for (const SweepRow& r : rows) {
    arr.push_back({{"swept_m", r.swept_m},
                   {"eta_traditional_bpj", optional_json(r.eta_traditional)},
                   {"eta_intra_bpj", optional_json(r.eta_intra)},
                   {"eta_inter_bpj", optional_json(r.eta_inter)},
                   {"feasible_traditional", r.eta_traditional.has_value()},
                   {"feasible_intra", r.eta_intra.has_value()},
                   {"feasible_inter", r.eta_inter.has_value()}});
  }
  return arr.dump(2) + '\n';
}

std::string verify_json(const std::vector<VerifyRow>& rows) {
  json arr = json::array();
  for (const VerifyRow& r : rows) {
    arr.push_back({{"scheme", closed_form::scheme_name(r.scheme)},
                   {"user", r.user},
                   {"p_target", finite_json(r.p_target)},
                   {"p_mc", finite_json(r.p_mc)},
                   {"ci95", finite_json(r.ci95)},
                   {"power_analytic_w", finite_json(r.power_analytic_w)},
                   {"power_mc_w", finite_json(r.power_mc_w)},
                   {"pass", scenario::status_name(r.status)}});
  }
  return arr.dump(2) + '\n';
}

std::string analyze_json(const std::vector<SchemeResult>& results) {
  json arr = json::array();
  for (const SchemeResult& r : results) {
    json obj = {{"scheme", closed_form::scheme_name(r.scheme)},
                {"feasible", r.report.has_value()}};
    if (r.report) {
      const auto& a = r.report->allocation;
      obj["p1_exchange_w"] = a.p1_exchange;
      obj["p2_exchange_w"] = a.p2_exchange;
      obj["p1_cellular_w"] = a.p1_cellular;
      obj["p2_cellular_w"] = a.p2_cellular;
      obj["total_w"] = a.total;
      obj["eta_bpj"] = r.report->eta;
    } else {
      for (const char* k : {"p1_exchange_w", "p2_exchange_w", "p1_cellular_w",
                            "p2_cellular_w", "total_w", "eta_bpj"}) {
        obj[k] = nullptr;
      }
      obj["error"] = r.error;
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + '\n';
}

std::vector<SweepRow> parse_sweep_csv(std::string_view text) {
  std::vector<SweepRow> rows;
  int line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!header_seen) {
      if (line != kSweepHeader) {
        throw std::runtime_error("sweep csv: unexpected header");
      }
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 7) {
      throw std::runtime_error("sweep csv line " + std::to_string(line_no) +
                               ": expected 7 fields");
    }
    SweepRow row;
    row.swept_m = parse_field(f[0], line_no);
    std::optional<double>* etas[] = {&row.eta_traditional, &row.eta_intra,
                                     &row.eta_inter};
    for (int i = 0; i < 3; ++i) {
      if (parse_flag(f[4 + i], line_no)) *etas[i] = parse_field(f[1 + i], line_no);
    }
    rows.push_back(row);
  }
  if (!header_seen) throw std::runtime_error("sweep csv: missing header");
  return rows;
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw std::runtime_error("failed writing to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open '" + path +
                             "' for writing: " + std::strerror(errno));
  }
  out << text;
  out.close();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace netcoop::report
