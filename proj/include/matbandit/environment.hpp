// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATBANDIT_ENVIRONMENT_HPP_
#define MATBANDIT_ENVIRONMENT_HPP_

#include <map>
#include <variant>
#include <vector>

#include "matbandit/matroid.hpp"
#include "matbandit/rng.hpp"

namespace matbandit {

// Item -> observed weight, restricted to a chosen basis.
using WeightMap = std::map<int, double>;

// Independent coin per item.
struct BernoulliEnv {
  std::vector<double> means;
};

// Latency model: raw latency of item e is latency[e] - 1 + Exp(1); the
// reward is clamp(1 - raw / normalization, 0, 1), so lower latency gives
// higher reward. normalization defaults to the largest expected latency.
struct ClippedShiftedExponentialEnv {
  std::vector<double> latencies;
  double scale = 1.0;
  double normalization = 0.0;
};

// One stored reward row is drawn uniformly per episode.
struct EmpiricalRowsEnv {
  std::vector<std::vector<double>> rows;
};

using EnvFamily =
    std::variant<BernoulliEnv, ClippedShiftedExponentialEnv, EmpiricalRowsEnv>;

// Stochastic weight distribution over [0,1]^L with a known mean vector.
// The mean vector is simulator-side bookkeeping only; learning policies
// never see it. Immutable; all randomness comes from the caller's Rng.
class WeightEnvironment {
 public:
  static WeightEnvironment bernoulli(std::vector<double> means);
  // Means have no convenient closed form once clipped, so they are frozen
  // from 10^6 Monte Carlo draws (deterministic internal seed) and recorded
  // in the run manifest.
  static WeightEnvironment clipped_shifted_exponential(
      std::vector<double> latencies);
  static WeightEnvironment empirical_rows(
      std::vector<std::vector<double>> rows);

  // Replaces the bookkeeping mean vector (e.g. restored from a manifest).
  WeightEnvironment with_mean_vector(WeightVector mean) const;

  int size() const { return size_; }
  const EnvFamily& family() const { return family_; }
  std::string_view kind_name() const;

  // One full realization w in [0,1]^L.
  WeightVector draw_full(Rng& rng) const;

  // Expected weights (w-bar). Simulator-only knowledge.
  const WeightVector& mean_vector() const { return mean_; }

 private:
  WeightEnvironment(int size, EnvFamily family, WeightVector mean);

  int size_ = 0;
  EnvFamily family_;
  WeightVector mean_;
};

// Semi-bandit feedback: the restriction of w to the chosen basis.
WeightMap feedback(const WeightEnvironment& env, const WeightVector& w,
                   const ItemSet& basis);

}  // namespace matbandit

#endif  // MATBANDIT_ENVIRONMENT_HPP_
