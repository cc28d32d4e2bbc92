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

#ifndef NETCOOP_PHILOX_HPP_
#define NETCOOP_PHILOX_HPP_

#include <array>
#include <cstdint>

// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Each
// (counter, key) pair maps to an independent 128-bit block, so any trial of a
// Monte Carlo run can be regenerated from its index alone.

namespace netcoop::monte_carlo {

class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;
  using Block = std::array<std::uint32_t, 4>;

  static constexpr int kRounds = 10;

  static constexpr Block generate(Counter ctr, Key key) {
    for (int r = 0; r < kRounds; ++r) {
      if (r > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const auto lo0 = static_cast<std::uint32_t>(p0);
      const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const auto lo1 = static_cast<std::uint32_t>(p1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
};

// Uniform stream for one trial: key = seed, counter = (trial, block).
class TrialStream {
 public:
  TrialStream(std::uint64_t seed, std::uint64_t trial)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        trial_(trial) {}

  // Uniform on the open interval (0, 1) with 53-bit resolution.
  double next_uniform() {
    if (used_ == 2) refill();
    const std::uint64_t bits = (std::uint64_t{block_[2 * used_]} << 32) |
                               block_[2 * used_ + 1];
    ++used_;
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  void refill() {
    block_ = Philox4x32::generate(
        {static_cast<std::uint32_t>(trial_),
         static_cast<std::uint32_t>(trial_ >> 32),
         static_cast<std::uint32_t>(next_block_),
         static_cast<std::uint32_t>(next_block_ >> 32)},
        key_);
    ++next_block_;
    used_ = 0;
  }

  Philox4x32::Key key_;
  std::uint64_t trial_;
  std::uint64_t next_block_ = 0;
  Philox4x32::Block block_{};
  int used_ = 2;
};

}  // namespace netcoop::monte_carlo

#endif  // NETCOOP_PHILOX_HPP_
