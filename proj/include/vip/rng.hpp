// Copyright 2025 The vipbench Authors
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

#ifndef VIP_RNG_HPP
#define VIP_RNG_HPP

#include <cstdint>

namespace vip {

// xoshiro256++ (Blackman & Vigna), seeded through splitmix64.
//
// The generator is pinned: every experiment artifact (problem instances,
// permutations, initial points) depends on this exact bit stream, so the
// algorithm must never change silently. Bounded draws use rejection
// sampling, not modulo, to stay unbiased.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform in [0, 1) with 53 random mantissa bits.
  double uniform01();

  // Uniform integer in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  // Standard normal via Box-Muller; consumes two uniforms per pair and
  // caches the second variate.
  double normal();

 private:
  std::uint64_t state_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace vip

#endif  // VIP_RNG_HPP
