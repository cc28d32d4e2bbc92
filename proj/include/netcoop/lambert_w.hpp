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

#ifndef NETCOOP_LAMBERT_W_HPP_
#define NETCOOP_LAMBERT_W_HPP_

// Real branches of the Lambert W function, the inverse of w -> w * exp(w).
//
//   W0  : [-1/e, inf)  -> [-1, inf)
//   W-1 : [-1/e, 0)    -> (-inf, -1]
//
// Both are seeded from the branch-point series (near -1/e) or the asymptotic
// logarithmic expansion, then refined with a bracketed Halley iteration that
// falls back to bisection whenever a step leaves the bracket. Arguments that
// fall below -1/e by no more than 1e-15 are treated as the branch point.

namespace netcoop::special {

inline constexpr double kInverseE = 0.36787944117144233;  // 1/e rounded
inline constexpr double kBranchPointSnap = 1e-15;

enum class LambertBranch { kPrincipal, kLower };

struct BranchedArg {
  double x;
  LambertBranch branch;
};

// Throws std::domain_error for x < -1/e.
double lambert_w0(double x);

// Throws std::domain_error for x outside [-1/e, 0).
double lambert_wm1(double x);

double lambert_w(BranchedArg arg);

// 1 + e * x evaluated with a two-term split of e, so that the distance to the
// branch point keeps its significant digits when x is within a few ulps of
// -1/e. Negative results mean x < -1/e.
double branch_point_offset(double x);

}  // namespace netcoop::special

#endif  // NETCOOP_LAMBERT_W_HPP_
