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

#include "matbandit/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>

#include "matbandit/errors.hpp"

namespace matbandit {
namespace {

void check_weights(const Matroid& m, const WeightVector& w,
                   const char* where) {
  if (static_cast<int>(w.size()) != m.ground_set_size()) {
    throw InputError(std::string(where) + ": weight vector of length " +
                     std::to_string(w.size()) + ", ground set has " +
                     std::to_string(m.ground_set_size()) + " items");
  }
  for (double x : w) {
    if (!std::isfinite(x)) {
      throw InputError(std::string(where) + ": non-finite weight");
    }
  }
}

void enumerate_independent(const Matroid& m, const ExtensionOracle& oracle,
                           int next_item, BruteForceResult& best,
                           const WeightVector& w, double weight) {
  // DFS in ascending item order visits sets in lexicographic order of their
  // sorted item lists, so strict improvement keeps the lex-smallest
  // maximizer (the empty set seeds the search at weight 0).
  if (weight > best.weight) {
    best.weight = weight;
    best.basis = oracle.items();
  }
  for (int e = next_item; e < m.ground_set_size(); ++e) {
    ExtensionOracle branch = oracle;
    if (!branch.can_add(e)) continue;
    branch.add(e);
    enumerate_independent(m, branch, e + 1, best, w, weight + w[e]);
  }
}

}  // namespace

double evaluate_modular(const ItemSet& s, const WeightVector& w) {
  double total = 0.0;
  std::unordered_set<int> seen;
  for (int e : s) {
    if (e < 0 || e >= static_cast<int>(w.size())) {
      throw InputError("evaluate_modular: item index out of range");
    }
    if (!seen.insert(e).second) {
      throw InputError("evaluate_modular: duplicate item " +
                       std::to_string(e));
    }
    total += w[e];
  }
  return total;
}

ItemSet greedy_max_basis(const Matroid& m, const WeightVector& w) {
  check_weights(m, w, "greedy_max_basis");
  std::vector<int> order(m.ground_set_size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (w[a] != w[b]) return w[a] > w[b];
    return a < b;
  });
  ExtensionOracle oracle(m);
  for (int e : order) {
    if (oracle.can_add(e)) oracle.add(e);
  }
  return oracle.items();
}

BruteForceResult brute_force_max_basis(const Matroid& m,
                                       const WeightVector& w) {
  check_weights(m, w, "brute_force_max_basis");
  if (m.ground_set_size() > 20) {
    throw InputError("brute_force_max_basis: refusing ground set of size " +
                     std::to_string(m.ground_set_size()) + " (limit 20)");
  }
  BruteForceResult best;  // empty set, weight 0
  ExtensionOracle root(m);
  enumerate_independent(m, root, 0, best, w, 0.0);
  return best;
}

ExchangeBijection construct_exchange_bijection(const Matroid& m,
                                               const ItemSet& reference_basis,
                                               const ItemSet& chosen_basis) {
  const int k_rank = m.rank();
  auto require_basis = [&](const ItemSet& s, const char* name) {
    if (static_cast<int>(s.size()) != k_rank || !is_independent(m, s)) {
      throw ContractViolation(std::string("construct_exchange_bijection: ") +
                              name + " is not a basis");
    }
  };
  require_basis(reference_basis, "reference_basis");
  require_basis(chosen_basis, "chosen_basis");

  std::vector<int> index_in_reference(m.ground_set_size(), -1);
  for (int i = 0; i < k_rank; ++i) index_in_reference[reference_basis[i]] = i;

  std::vector<int> pi(k_rank, -1);
  std::vector<char> paired(k_rank, 0);
  std::vector<char> in_working(m.ground_set_size(), 0);
  ItemSet working = chosen_basis;
  for (int e : working) in_working[e] = 1;

  // Backward exchange: positions K-1 down to 0. Shared items pair with
  // their own reference index; each remaining position takes the smallest
  // unpaired reference item that keeps the working set independent.
  for (int k = k_rank - 1; k >= 0; --k) {
    const int e = chosen_basis[k];
    if (index_in_reference[e] >= 0) {
      pi[k] = index_in_reference[e];
      paired[pi[k]] = 1;
      continue;
    }
    int found = -1;
    for (int i = 0; i < k_rank && found < 0; ++i) {
      if (paired[i]) continue;
      const int candidate = reference_basis[i];
      if (in_working[candidate]) continue;
      ItemSet trial;
      trial.reserve(k_rank);
      for (int x : working) {
        if (x != e) trial.push_back(x);
      }
      trial.push_back(candidate);
      if (is_independent(m, trial)) found = i;
    }
    if (found < 0) {
      throw AxiomViolation(
          "construct_exchange_bijection: no exchange candidate at position " +
          std::to_string(k) + "; augmentation property violated");
    }
    pi[k] = found;
    paired[found] = 1;
    in_working[e] = 0;
    in_working[reference_basis[found]] = 1;
    std::replace(working.begin(), working.end(), e, reference_basis[found]);
  }
  return ExchangeBijection{std::move(pi)};
}

}  // namespace matbandit
