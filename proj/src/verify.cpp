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

#include "matbandit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "matbandit/errors.hpp"
#include "matbandit/gaps.hpp"
#include "matbandit/greedy.hpp"
#include "matbandit/instances.hpp"

namespace matbandit {
namespace {

constexpr int kExhaustiveLimit = 14;

ItemSet items_of_mask(std::uint32_t mask) {
  ItemSet items;
  for (int e = 0; mask != 0; ++e, mask >>= 1) {
    if (mask & 1u) items.push_back(e);
  }
  return items;
}

std::vector<char> independence_table(const Matroid& m) {
  const int n = m.ground_set_size();
  std::vector<char> indep(std::size_t{1} << n, 0);
  for (std::uint32_t mask = 0; mask < indep.size(); ++mask) {
    indep[mask] = is_independent(m, items_of_mask(mask)) ? 1 : 0;
  }
  return indep;
}

WeightVector random_weights(int n, Rng& rng) {
  WeightVector w(n);
  for (double& x : w) x = rng.uniform01();
  return w;
}

}  // namespace

CheckResult check_matroid_axioms(const Matroid& m) {
  const int n = m.ground_set_size();
  if (n > kExhaustiveLimit) {
    throw InputError("check_matroid_axioms: ground set too large (" +
                     std::to_string(n) + " > " +
                     std::to_string(kExhaustiveLimit) + ")");
  }
  CheckResult result{"matroid_axioms", true, 0, ""};
  const std::vector<char> indep = independence_table(m);
  if (!indep[0]) {
    return {"matroid_axioms", false, 1, "empty set is not independent"};
  }
  ++result.cases;

  // Hereditary: removing any one item keeps independence.
  for (std::uint32_t mask = 1; mask < indep.size(); ++mask) {
    if (!indep[mask]) continue;
    for (int e = 0; e < n; ++e) {
      if (!(mask & (1u << e))) continue;
      ++result.cases;
      if (!indep[mask & ~(1u << e)]) {
        return {"matroid_axioms", false, result.cases,
                "hereditary violated at mask " + std::to_string(mask)};
      }
    }
  }

  // Augmentation: group independent masks by cardinality.
  std::vector<std::vector<std::uint32_t>> by_size(n + 1);
  for (std::uint32_t mask = 0; mask < indep.size(); ++mask) {
    if (indep[mask]) {
      by_size[__builtin_popcount(mask)].push_back(mask);
    }
  }
  for (int size = 0; size < n; ++size) {
    for (std::uint32_t larger : by_size[size + 1]) {
      for (std::uint32_t smaller : by_size[size]) {
        ++result.cases;
        std::uint32_t candidates = larger & ~smaller;
        bool extended = false;
        while (candidates != 0 && !extended) {
          const std::uint32_t bit = candidates & -candidates;
          candidates &= ~bit;
          extended = indep[smaller | bit];
        }
        if (!extended) {
          return {"matroid_axioms", false, result.cases,
                  "augmentation violated for masks " +
                      std::to_string(smaller) + " / " +
                      std::to_string(larger)};
        }
      }
    }
  }
  return result;
}

CheckResult check_extension_consistency(const Matroid& m) {
  const int n = m.ground_set_size();
  if (n > kExhaustiveLimit) {
    throw InputError("check_extension_consistency: ground set too large");
  }
  CheckResult result{"extension_consistency", true, 0, ""};
  const std::vector<char> indep = independence_table(m);
  for (std::uint32_t mask = 0; mask < indep.size(); ++mask) {
    if (!indep[mask]) continue;
    const ItemSet s = items_of_mask(mask);
    for (int e = 0; e < n; ++e) {
      if (mask & (1u << e)) continue;
      ++result.cases;
      const bool incremental = can_extend(m, s, e);
      const bool from_scratch = indep[mask | (1u << e)] != 0;
      if (incremental != from_scratch) {
        return {"extension_consistency", false, result.cases,
                "mismatch at mask " + std::to_string(mask) + " item " +
                    std::to_string(e)};
      }
    }
  }
  return result;
}

CheckResult check_greedy_matches_brute_force(const Matroid& m, int trials,
                                             Rng& rng) {
  CheckResult result{"greedy_optimality", true, 0, ""};
  for (int i = 0; i < trials; ++i) {
    ++result.cases;
    const WeightVector w = random_weights(m.ground_set_size(), rng);
    const double greedy = evaluate_modular(greedy_max_basis(m, w), w);
    const double exact = brute_force_max_basis(m, w).weight;
    if (std::abs(greedy - exact) > 1e-12) {
      return {"greedy_optimality", false, result.cases,
              "greedy " + std::to_string(greedy) + " vs brute force " +
                  std::to_string(exact)};
    }
  }
  return result;
}

CheckResult check_bijection_invariants(const Matroid& m, int trials,
                                       Rng& rng) {
  CheckResult result{"exchange_bijection", true, 0, ""};
  const int k_rank = m.rank();
  for (int i = 0; i < trials; ++i) {
    ++result.cases;
    const ItemSet reference = random_basis(m, rng);
    const ItemSet chosen = random_basis(m, rng);
    const ExchangeBijection bij =
        construct_exchange_bijection(m, reference, chosen);

    std::vector<char> used(k_rank, 0);
    for (int k = 0; k < k_rank; ++k) {
      const int i_ref = bij.pi[k];
      if (i_ref < 0 || i_ref >= k_rank || used[i_ref]) {
        return {"exchange_bijection", false, result.cases,
                "pi is not a bijection"};
      }
      used[i_ref] = 1;
      // Fixed points on shared items.
      const auto shared =
          std::find(reference.begin(), reference.end(), chosen[k]);
      if (shared != reference.end() &&
          i_ref != static_cast<int>(shared - reference.begin())) {
        return {"exchange_bijection", false, result.cases,
                "shared item not paired with itself"};
      }
      // Prefix-independence.
      ItemSet prefix(chosen.begin(), chosen.begin() + k);
      prefix.push_back(reference[i_ref]);
      if (!is_independent(m, prefix)) {
        return {"exchange_bijection", false, result.cases,
                "prefix independence violated at position " +
                    std::to_string(k)};
      }
    }
  }
  return result;
}

CheckResult check_decomposition_sweep(const Matroid& m, int trials,
                                      Rng& rng) {
  CheckResult result{"regret_decomposition", true, 0, ""};
  const WeightVector w_bar = random_weights(m.ground_set_size(), rng);
  for (int i = 0; i < trials; ++i) {
    ++result.cases;
    const DecompositionReport report =
        decomposition_check(m, w_bar, random_basis(m, rng));
    if (!report.ok) {
      return {"regret_decomposition", false, result.cases,
              report.violations.front()};
    }
  }
  return result;
}

std::vector<CheckResult> run_verification_suites(const Matroid& m, Rng& rng) {
  std::vector<CheckResult> results;
  if (m.ground_set_size() <= kExhaustiveLimit) {
    results.push_back(check_matroid_axioms(m));
    results.push_back(check_extension_consistency(m));
  } else {
    results.push_back({"matroid_axioms", true, 0,
                       "skipped: exhaustive check needs L <= 14"});
    results.push_back({"extension_consistency", true, 0,
                       "skipped: exhaustive check needs L <= 14"});
  }
  if (m.ground_set_size() <= 20) {
    results.push_back(check_greedy_matches_brute_force(m, 50, rng));
  } else {
    results.push_back({"greedy_optimality", true, 0,
                       "skipped: brute force needs L <= 20"});
  }
  results.push_back(check_bijection_invariants(m, 200, rng));
  results.push_back(check_decomposition_sweep(m, 200, rng));
  return results;
}

}  // namespace matbandit
