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

#include "vip/sampling.hpp"

#include <string>

#include "vip/errors.hpp"

namespace vip {

const char* to_string(SamplingRegime regime) {
  switch (regime) {
    case SamplingRegime::kRandomReshuffle: return "rr";
    case SamplingRegime::kShuffleOnce: return "so";
    case SamplingRegime::kIncremental: return "ieg";
    case SamplingRegime::kUniform: return "uniform";
  }
  return "?";
}

SamplingStrategy::SamplingStrategy(SamplingRegime regime, int n,
                                   std::uint64_t seed)
    : regime_(regime), n_(n), rng_(seed) {
  if (n < 1) throw ParameterError("SamplingStrategy: n must be >= 1");
  if (regime_ == SamplingRegime::kShuffleOnce) {
    frozen_.resize(n_);
    fill_permutation(frozen_);
  }
}

void SamplingStrategy::fill_permutation(std::vector<int>& out) {
  // Inside-out Fisher-Yates; bounded draws are rejection-sampled.
  out[0] = 0;
  for (int i = 1; i < n_; ++i) {
    const int j = static_cast<int>(rng_.below(static_cast<std::uint64_t>(i) + 1));
    out[i] = out[j];
    out[j] = i;
  }
}

std::vector<int> SamplingStrategy::epoch_order(long epoch) {
  std::vector<int> out(n_);
  epoch_order(epoch, out);
  return out;
}

void SamplingStrategy::epoch_order(long epoch, std::vector<int>& out) {
  if (epoch != next_epoch_) {
    throw ContractViolation(
        "SamplingStrategy::epoch_order: epochs must be requested in order; "
        "expected " + std::to_string(next_epoch_) + ", got " +
        std::to_string(epoch));
  }
  ++next_epoch_;
  out.resize(n_);
  switch (regime_) {
    case SamplingRegime::kRandomReshuffle:
      fill_permutation(out);
      break;
    case SamplingRegime::kShuffleOnce:
      out = frozen_;
      break;
    case SamplingRegime::kIncremental:
      for (int i = 0; i < n_; ++i) out[i] = i;
      break;
    case SamplingRegime::kUniform:
      for (int i = 0; i < n_; ++i) {
        out[i] = static_cast<int>(rng_.below(static_cast<std::uint64_t>(n_)));
      }
      break;
  }
}

namespace {

Vector population_mean(const std::vector<Vector>& population) {
  const std::size_t dim = population.front().size();
  Vector mean(dim, 0.0);
  for (const Vector& x : population) {
    if (x.size() != dim) {
      throw ContractViolation("wr_sample_variance: inconsistent dimensions");
    }
    for (std::size_t c = 0; c < dim; ++c) mean[c] += x[c];
  }
  for (double& m : mean) m /= static_cast<double>(population.size());
  return mean;
}

}  // namespace

double wr_sample_variance(const std::vector<Vector>& population, int d) {
  const int n = static_cast<int>(population.size());
  if (n < 2) throw ParameterError("wr_sample_variance: need n >= 2");
  if (d < 1 || d > n) {
    throw ParameterError("wr_sample_variance: need 1 <= d <= n");
  }
  const Vector mean = population_mean(population);
  double sigma_sq = 0.0;
  for (const Vector& x : population) {
    for (std::size_t c = 0; c < mean.size(); ++c) {
      const double diff = x[c] - mean[c];
      sigma_sq += diff * diff;
    }
  }
  sigma_sq /= static_cast<double>(n);
  return static_cast<double>(n - d) / (static_cast<double>(d) * (n - 1)) *
         sigma_sq;
}

double wr_sample_variance_enumerated(const std::vector<Vector>& population,
                                     int d) {
  const int n = static_cast<int>(population.size());
  if (n > 8) {
    throw ParameterError(
        "wr_sample_variance_enumerated: enumeration guarded to n <= 8");
  }
  if (n < 2) throw ParameterError("wr_sample_variance_enumerated: need n >= 2");
  if (d < 1 || d > n) {
    throw ParameterError("wr_sample_variance_enumerated: need 1 <= d <= n");
  }
  const Vector mean = population_mean(population);
  const std::size_t dim = mean.size();

  double total = 0.0;
  long count = 0;
  std::vector<int> pick(d);
  // Lexicographic subsets of size d; the sample mean ignores order, so
  // subsets and length-d permutations give the same expectation.
  for (int i = 0; i < d; ++i) pick[i] = i;
  for (;;) {
    Vector sample_mean(dim, 0.0);
    for (int i : pick) {
      for (std::size_t c = 0; c < dim; ++c) sample_mean[c] += population[i][c];
    }
    double dev = 0.0;
    for (std::size_t c = 0; c < dim; ++c) {
      const double diff = sample_mean[c] / d - mean[c];
      dev += diff * diff;
    }
    total += dev;
    ++count;

    int i = d - 1;
    while (i >= 0 && pick[i] == n - d + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return total / static_cast<double>(count);
}

}  // namespace vip
