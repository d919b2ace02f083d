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

#ifndef MATBANDIT_INSTANCES_HPP_
#define MATBANDIT_INSTANCES_HPP_

#include "matbandit/environment.hpp"
#include "matbandit/matroid.hpp"
#include "matbandit/rng.hpp"

namespace matbandit {

// The partition-matroid bandit used for the regret lower bound: capacity-1
// blocks, Bernoulli mean 0.5 on each block's minimum-index item and
// 0.5 - delta elsewhere. asymptotic_slope is the (L-K)/(4 delta) floor on
// regret / ln(n) that any consistent algorithm must pay.
struct LowerBoundInstance {
  Matroid matroid;
  WeightEnvironment environment;
  double asymptotic_slope = 0.0;
};

LowerBoundInstance generate_lower_bound_instance(int ground_set_size,
                                                 int rank, double delta);

// Random instances for property tests and the verification suites.
enum class FamilyKind { uniform, partition, graphic, transversal, linear };

Matroid random_matroid(FamilyKind kind, int ground_set_size, Rng& rng);

// Connected multigraph-free random graph with the requested edge count.
Matroid random_connected_graphic(int vertex_count, int edge_count, Rng& rng);

// Bernoulli environment with means drawn uniformly from [low, high].
WeightEnvironment random_bernoulli_environment(int ground_set_size, Rng& rng,
                                               double low = 0.1,
                                               double high = 0.9);

// Greedy completion over a random item permutation; every basis has
// positive probability.
ItemSet random_basis(const Matroid& m, Rng& rng);

}  // namespace matbandit

#endif  // MATBANDIT_INSTANCES_HPP_
