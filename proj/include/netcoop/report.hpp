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

#ifndef NETCOOP_REPORT_HPP_
#define NETCOOP_REPORT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "netcoop/experiments.hpp"

// CSV and JSON emitters. CSV: `.` decimal separator, shortest round-trip
// float formatting, LF line endings, header always present, empty field for
// a value that does not exist (infeasible scheme, skipped row). JSON mirrors
// the CSV field names with null for missing values.

namespace netcoop::report {

using scenario::SchemeResult;
using scenario::SweepRow;
using scenario::VerifyRow;

// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);

inline constexpr std::string_view kSweepHeader =
    "swept_m,eta_traditional_bpj,eta_intra_bpj,eta_inter_bpj,"
    "feasible_traditional,feasible_intra,feasible_inter";
inline constexpr std::string_view kVerifyHeader =
    "scheme,user,p_target,p_mc,ci95,power_analytic_w,power_mc_w,pass";
inline constexpr std::string_view kAnalyzeHeader =
    "scheme,p1_exchange_w,p2_exchange_w,p1_cellular_w,p2_cellular_w,total_w,"
    "eta_bpj,feasible";

std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string verify_csv(const std::vector<VerifyRow>& rows);
std::string analyze_csv(const std::vector<SchemeResult>& results);

std::string sweep_json(const std::vector<SweepRow>& rows);
std::string verify_json(const std::vector<VerifyRow>& rows);
std::string analyze_json(const std::vector<SchemeResult>& results);

// Inverse of sweep_csv. Throws std::runtime_error on malformed input.
std::vector<SweepRow> parse_sweep_csv(std::string_view text);

// Writes to `path`, or to standard output when path is empty or "-".
// Throws std::runtime_error naming the path on I/O failure.
void write_text(const std::string& text, const std::string& path);

}  // namespace netcoop::report

#endif  // NETCOOP_REPORT_HPP_
