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

#ifndef MATBANDIT_GREEDY_HPP_
#define MATBANDIT_GREEDY_HPP_

#include "matbandit/matroid.hpp"

namespace matbandit {

// Sum of the weights of the items in s.
double evaluate_modular(const ItemSet& s, const WeightVector& w);

// Greedy maximum-weight basis: items sorted by weight descending (ties by
// ascending index), added whenever the set stays independent. The returned
// set preserves insertion order, so position k holds the k-th chosen item.
ItemSet greedy_max_basis(const Matroid& m, const WeightVector& w);

struct BruteForceResult {
  ItemSet basis;   // lexicographically smallest maximizer
  double weight = 0.0;
};

// Enumerates every independent set. Testing oracle; refuses ground sets
// larger than 20 items.
BruteForceResult brute_force_max_basis(const Matroid& m,
                                       const WeightVector& w);

// Pairing between a chosen basis and a reference basis: pi[k] is the index
// in the reference basis paired with position k of the chosen basis.
// Guarantees, for every k:
//   - {chosen[0..k-1], reference[pi[k]]} is independent, and
//   - pi[k] = i whenever chosen[k] == reference[i].
struct ExchangeBijection {
  std::vector<int> pi;
};

// Constructive backward-exchange pairing between two bases. Unpaired
// candidates are taken smallest reference index first. Throws
// ContractViolation if either input is not a basis and AxiomViolation if no
// exchange candidate exists (impossible for a true matroid).
ExchangeBijection construct_exchange_bijection(const Matroid& m,
                                               const ItemSet& reference_basis,
                                               const ItemSet& chosen_basis);

}  // namespace matbandit

#endif  // MATBANDIT_GREEDY_HPP_
