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

#ifndef MATBANDIT_RNG_HPP_
#define MATBANDIT_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>

namespace matbandit {

// Seedable random stream. The variate transforms are written out by hand so
// that a given seed produces the same sequence on every standard library
// (std::*_distribution sequences are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). n must be positive.
  int uniform_int(int n) {
    // Rejection-free; bias is < n / 2^53, negligible for the set sizes here.
    int v = static_cast<int>(uniform01() * static_cast<double>(n));
    return v < n ? v : n - 1;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Exponential with rate 1.
  double exponential() { return -std::log1p(-uniform01()); }

  std::uint64_t next_u64() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace matbandit

#endif  // MATBANDIT_RNG_HPP_
