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

#include "matbandit/environment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "matbandit/errors.hpp"

namespace matbandit {
namespace {

constexpr int kMeanEstimateSamples = 1000000;
constexpr std::uint64_t kMeanEstimateSeed = 0x6d656173757265ULL;

double clip01(double x) { return std::min(1.0, std::max(0.0, x)); }

double clipped_reward(double latency, double noise, double normalization) {
  const double raw = latency - 1.0 + noise;
  return clip01(1.0 - raw / normalization);
}

}  // namespace

WeightEnvironment::WeightEnvironment(int size, EnvFamily family,
                                     WeightVector mean)
    : size_(size), family_(std::move(family)), mean_(std::move(mean)) {}

WeightEnvironment WeightEnvironment::bernoulli(std::vector<double> means) {
  for (double p : means) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InputError("bernoulli environment: mean outside [0,1]");
    }
  }
  const int n = static_cast<int>(means.size());
  WeightVector mean = means;
  return WeightEnvironment(n, BernoulliEnv{std::move(means)},
                           std::move(mean));
}

WeightEnvironment WeightEnvironment::clipped_shifted_exponential(
    std::vector<double> latencies) {
  if (latencies.empty()) {
    throw InputError("latency environment: no items");
  }
  double max_latency = 0.0;
  for (double mu : latencies) {
    if (!(std::isfinite(mu) && mu >= 1.0)) {
      throw InputError("latency environment: expected latency must be >= 1");
    }
    max_latency = std::max(max_latency, mu);
  }
  // Shared noise sample reused across items; per-item means come out with
  // standard error sigma/1000 and are frozen for the environment lifetime.
  Rng rng(kMeanEstimateSeed);
  std::vector<double> noise(kMeanEstimateSamples);
  for (double& x : noise) x = rng.exponential();
  const int n = static_cast<int>(latencies.size());
  WeightVector mean(n);
  for (int e = 0; e < n; ++e) {
    double sum = 0.0;
    for (double x : noise) sum += clipped_reward(latencies[e], x, max_latency);
    mean[e] = sum / kMeanEstimateSamples;
  }
  return WeightEnvironment(
      n,
      ClippedShiftedExponentialEnv{std::move(latencies), 1.0, max_latency},
      std::move(mean));
}

WeightEnvironment WeightEnvironment::empirical_rows(
    std::vector<std::vector<double>> rows) {
  if (rows.empty()) throw InputError("empirical environment: no rows");
  const std::size_t width = rows.front().size();
  if (width == 0) throw InputError("empirical environment: empty rows");
  for (const auto& row : rows) {
    if (row.size() != width) {
      throw InputError("empirical environment: ragged rows");
    }
    for (double x : row) {
      if (!(x >= 0.0 && x <= 1.0)) {
        throw InputError("empirical environment: entry outside [0,1]");
      }
    }
  }
  WeightVector mean(width, 0.0);
  for (const auto& row : rows) {
    for (std::size_t e = 0; e < width; ++e) mean[e] += row[e];
  }
  for (double& x : mean) x /= static_cast<double>(rows.size());
  return WeightEnvironment(static_cast<int>(width),
                           EmpiricalRowsEnv{std::move(rows)},
                           std::move(mean));
}

WeightEnvironment WeightEnvironment::with_mean_vector(WeightVector mean) const {
  if (static_cast<int>(mean.size()) != size_) {
    throw InputError("with_mean_vector: wrong length");
  }
  WeightEnvironment copy = *this;
  copy.mean_ = std::move(mean);
  return copy;
}

std::string_view WeightEnvironment::kind_name() const {
  switch (family_.index()) {
    case 0: return "bernoulli";
    case 1: return "clipped_shifted_exponential";
    default: return "empirical_rows";
  }
}

WeightVector WeightEnvironment::draw_full(Rng& rng) const {
  return std::visit(
      [&](const auto& env) -> WeightVector {
        using E = std::decay_t<decltype(env)>;
        if constexpr (std::is_same_v<E, BernoulliEnv>) {
          WeightVector w(size_);
          for (int e = 0; e < size_; ++e) {
            w[e] = rng.bernoulli(env.means[e]) ? 1.0 : 0.0;
          }
          return w;
        } else if constexpr (std::is_same_v<E,
                                            ClippedShiftedExponentialEnv>) {
          WeightVector w(size_);
          for (int e = 0; e < size_; ++e) {
            w[e] = clipped_reward(env.latencies[e], rng.exponential(),
                                  env.normalization);
          }
          return w;
        } else {
          const int row = rng.uniform_int(static_cast<int>(env.rows.size()));
          return WeightVector(env.rows[row].begin(), env.rows[row].end());
        }
      },
      family_);
}

WeightMap feedback(const WeightEnvironment& env, const WeightVector& w,
                   const ItemSet& basis) {
  if (static_cast<int>(w.size()) != env.size()) {
    throw InputError("feedback: weight vector length mismatch");
  }
  WeightMap observed;
  for (int e : basis) {
    if (e < 0 || e >= env.size()) {
      throw InputError("feedback: basis item out of range");
    }
    observed.emplace(e, w[e]);
  }
  if (observed.size() != basis.size()) {
    throw InputError("feedback: duplicate basis item");
  }
  return observed;
}

}  // namespace matbandit
