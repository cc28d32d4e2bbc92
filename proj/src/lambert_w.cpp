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

#include "netcoop/lambert_w.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace netcoop::special {
namespace {

constexpr double kEHigh = 2.718281828459045;
constexpr double kELow = 1.4456468917292502e-16;  // e - kEHigh
constexpr int kMaxIterations = 60;
constexpr double kStepTolerance = 1e-14;

// Switch to iterating on w + log|w| = log|x| once exp(w) is no longer safe.
constexpr double kLogSpaceAbove = 1e10;
constexpr double kLogSpaceBelow = -1e-10;

// Below this offset the truncated branch series is exact to ~1e-20, beyond
// what a residual-driven iteration can resolve on the flat part of w e^w.
constexpr double kSeriesOnlyOffset = 1e-6;

[[noreturn]] void domain_failure(const char* branch, double x) {
  throw std::domain_error(std::string("lambert_") + branch +
                          ": argument out of domain: " + std::to_string(x));
}

// W = -1 + p - p^2/3 + 11/72 p^3 - 43/540 p^4 + 769/17280 p^5 - 221/8505 p^6,
// with p = +-sqrt(2 (1 + e x)); the sign selects the branch.
double branch_series(double p) {
  constexpr double c[] = {-1.0,
                          1.0,
                          -1.0 / 3.0,
                          11.0 / 72.0,
                          -43.0 / 540.0,
                          769.0 / 17280.0,
                          -221.0 / 8505.0};
  double sum = c[6];
  for (int i = 5; i >= 0; --i) sum = sum * p + c[i];
  return sum;
}

struct Bracket {
  double lo;
  double hi;
};

// Halley on f(w) = w e^w - x, kept inside [lo, hi]. w e^w is increasing on
// the principal branch and decreasing on the lower one.
double refine_direct(double x, double w, Bracket bracket, bool increasing) {
  for (int i = 0; i < kMaxIterations; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (f == 0.0) return w;
    if ((f > 0.0) == increasing) {
      bracket.hi = std::min(bracket.hi, w);
    } else {
      bracket.lo = std::max(bracket.lo, w);
    }
    const double fp = ew * (w + 1.0);
    double next;
    if (fp == 0.0) {
      next = 0.5 * (bracket.lo + bracket.hi);
    } else {
      const double fpp = ew * (w + 2.0);
      next = w - f / (fp - 0.5 * fpp * f / fp);
      if (!(next > bracket.lo && next < bracket.hi)) {
        next = 0.5 * (bracket.lo + bracket.hi);
      }
    }
    const double step = next - w;
    w = next;
    if (std::abs(step) <= kStepTolerance * std::abs(w)) break;
  }
  return w;
}

// Halley on h(w) = w + log|w| - log|x|, for |x| very large or very small.
double refine_log_space(double x, double w) {
  const double log_abs_x = std::log(std::abs(x));
  for (int i = 0; i < kMaxIterations; ++i) {
    const double h = w + std::log(std::abs(w)) - log_abs_x;
    const double hp = 1.0 + 1.0 / w;
    const double hpp = -1.0 / (w * w);
    const double step = h / (hp - 0.5 * hpp * h / hp);
    w -= step;
    if (std::abs(step) <= kStepTolerance * std::abs(w)) break;
  }
  return w;
}

}  // namespace

double branch_point_offset(double x) {
  return std::fma(kEHigh, x, 1.0) + kELow * x;
}

double lambert_w0(double x) {
  if (std::isnan(x)) domain_failure("w0", x);
  if (x == 0.0) return 0.0;
  if (x == std::numeric_limits<double>::infinity()) return x;

  const double offset = branch_point_offset(x);
  if (offset <= 0.0) {
    if (offset == 0.0 || -kInverseE - x <= kBranchPointSnap) return -1.0;
    domain_failure("w0", x);
  }

  if (x > kLogSpaceAbove) {
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    return refine_log_space(x, l1 - l2 + l2 / l1);
  }

  if (offset < kSeriesOnlyOffset) return branch_series(std::sqrt(2.0 * offset));

  double seed;
  if (x < -0.25) {
    seed = branch_series(std::sqrt(2.0 * offset));
  } else if (x < 0.25) {
    seed = x * (1.0 + x * (-1.0 + x * (1.5 - 8.0 / 3.0 * x)));
  } else {
    const double l = std::log1p(x);
    seed = l * (1.0 - std::log1p(l) / (2.0 + l));
  }
  const Bracket bracket = x < 0.0 ? Bracket{-1.0, 0.0}
                                  : Bracket{0.0, std::log1p(x)};
  return refine_direct(x, std::clamp(seed, bracket.lo, bracket.hi), bracket,
                       true);
}

double lambert_wm1(double x) {
  if (std::isnan(x) || x >= 0.0) domain_failure("wm1", x);

  const double offset = branch_point_offset(x);
  if (offset <= 0.0) {
    if (offset == 0.0 || -kInverseE - x <= kBranchPointSnap) return -1.0;
    domain_failure("wm1", x);
  }

  if (x > kLogSpaceBelow) {
    const double l1 = std::log(-x);
    const double l2 = std::log(-l1);
    return refine_log_space(x, l1 - l2 + l2 / l1);
  }

  if (offset < kSeriesOnlyOffset) {
    return branch_series(-std::sqrt(2.0 * offset));
  }

  // With u = -log(-x) - 1:  -1 - sqrt(2u) - u < W-1(x) < -1 - sqrt(2u) - 2u/3.
  const double u = std::max(0.0, -std::log(-x) - 1.0);
  const double root = std::sqrt(2.0 * u);
  // The lower bound gets one unit of slack; the upper bound is left at -1
  // because rounding in u can push -1 - sqrt(2u) - 2u/3 past the root.
  const Bracket bracket{-2.0 - root - u, -1.0};

  double seed;
  if (x < -0.25) {
    seed = branch_series(-std::sqrt(2.0 * offset));
  } else {
    const double l1 = std::log(-x);
    const double l2 = std::log(-l1);
    seed = l1 - l2 + l2 / l1;
  }
  return refine_direct(x, std::clamp(seed, bracket.lo, bracket.hi), bracket,
                       false);
}

double lambert_w(BranchedArg arg) {
  return arg.branch == LambertBranch::kPrincipal ? lambert_w0(arg.x)
                                                 : lambert_wm1(arg.x);
}

}  // namespace netcoop::special
