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

#ifndef MATBANDIT_GAPS_HPP_
#define MATBANDIT_GAPS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "matbandit/greedy.hpp"
#include "matbandit/matroid.hpp"

namespace matbandit {

// Difficulty profile of an instance: for every suboptimal item e, the gaps
// against the optimal items ordered by descending expected weight. Since
// the optimal items are sorted, each row of positive gaps is a prefix.
struct GapProfile {
  ItemSet optimal_basis;             // a*_1.. a*_K, descending mean
  std::vector<char> is_optimal;      // per ground-set item
  std::vector<std::vector<double>> gaps;  // gaps[e][k], suboptimal e only
  std::vector<int> positive_count;   // K_e; 0 for optimal items
  std::optional<double> delta_min;   // absent when no positive gap exists
};

GapProfile compute_gap_profile(const Matroid& m, const WeightVector& w_bar);

// Per-basis regret-decomposition audit built on the exchange bijection:
//  (i)  the paired gap sum equals the expected-value difference,
//  (ii) truncating negative gaps can only increase the sum,
//  (iii) each suboptimal item is paired at most once and at most K pairs
//        exist in total.
struct DecompositionReport {
  bool ok = true;
  double pairing_sum = 0.0;       // sum of paired gaps
  double value_difference = 0.0;  // f(A*, w-bar) - f(A^t, w-bar)
  double truncated_sum = 0.0;     // positive gaps only
  int paired_suboptimal = 0;
  std::vector<int> pi;            // the bijection used
  std::vector<std::string> violations;
};

DecompositionReport decomposition_check(const Matroid& m,
                                        const WeightVector& w_bar,
                                        const ItemSet& chosen_basis);

// Gap-dependent cumulative regret envelope:
//   sum_e 16 / gap_{e,K_e} * ln(n)  +  sum_e sum_{k<=K_e} gap_{e,k} * 4/3 pi^2.
// Items with no positive gap contribute nothing. horizon >= 1.
double compute_gap_dependent_bound(const GapProfile& gp, double horizon);

// Gap-free envelope 8 sqrt(K L n ln n) + 4/3 pi^2 K L; horizon >= 2.
double compute_gap_free_bound(int ground_set_size, int rank, double horizon);

}  // namespace matbandit

#endif  // MATBANDIT_GAPS_HPP_
