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

#ifndef VIP_SAMPLING_HPP
#define VIP_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "vip/linalg.hpp"
#include "vip/rng.hpp"

namespace vip {

enum class SamplingRegime {
  kRandomReshuffle,  // fresh permutation every epoch
  kShuffleOnce,      // one permutation, frozen at construction
  kIncremental,      // dataset order, no randomness
  kUniform,          // n independent with-replacement draws per epoch
};

const char* to_string(SamplingRegime regime);

// Stateful index-order generator. A strategy is a sequential-state
// machine: epochs must be requested in order 0, 1, 2, ... so the RNG
// stream is consumed deterministically; replaying a run means rebuilding
// the strategy from its seed. Single-owner, not shareable across threads.
class SamplingStrategy {
 public:
  SamplingStrategy(SamplingRegime regime, int n, std::uint64_t seed);

  SamplingRegime regime() const { return regime_; }
  int n() const { return n_; }

  // Index order for epoch k (k must equal the number of epochs already
  // generated). RR: fresh Fisher-Yates permutation. SO: the frozen
  // permutation. IEG: identity order. Uniform: n draws with replacement.
  std::vector<int> epoch_order(long epoch);

  // Same, writing into a caller-owned buffer sized n.
  void epoch_order(long epoch, std::vector<int>& out);

 private:
  void fill_permutation(std::vector<int>& out);

  SamplingRegime regime_;
  int n_;
  Rng rng_;
  std::vector<int> frozen_;
  long next_epoch_ = 0;
};

// Exact expected squared deviation of a without-replacement sample mean
// from the population mean:  E||X_bar - mu||^2 = (n-d)/(d(n-1)) sigma^2,
// with sigma^2 the population variance (1/n) sum ||X_i - mu||^2.
// Requires n >= 2 and 1 <= d <= n.
double wr_sample_variance(const std::vector<Vector>& population, int d);

// Brute-force oracle: averages ||sample mean - mu||^2 over every size-d
// subset. Guarded to n <= 8.
double wr_sample_variance_enumerated(const std::vector<Vector>& population,
                                     int d);

}  // namespace vip

#endif  // VIP_SAMPLING_HPP
