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

#include "matbandit/gaps.hpp"

#include <algorithm>
#include <cmath>

#include "matbandit/errors.hpp"
#include "matbandit/policies.hpp"

namespace matbandit {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTieTolerance = 1e-12;

}  // namespace

GapProfile compute_gap_profile(const Matroid& m, const WeightVector& w_bar) {
  const ItemSet basis = optimal_policy_select(m, w_bar).basis;
  GapProfile gp;
  gp.optimal_basis = basis;
  // The greedy construction already emits items in descending mean order;
  // a stable sort keeps deterministic positions for tied means.
  std::stable_sort(gp.optimal_basis.begin(), gp.optimal_basis.end(),
                   [&](int a, int b) { return w_bar[a] > w_bar[b]; });
  const int L = m.ground_set_size();
  const int K = static_cast<int>(gp.optimal_basis.size());
  gp.is_optimal.assign(L, 0);
  for (int e : gp.optimal_basis) gp.is_optimal[e] = 1;
  gp.gaps.assign(L, {});
  gp.positive_count.assign(L, 0);
  for (int e = 0; e < L; ++e) {
    if (gp.is_optimal[e]) continue;
    auto& row = gp.gaps[e];
    row.resize(K);
    int positive = 0;
    for (int k = 0; k < K; ++k) {
      row[k] = w_bar[gp.optimal_basis[k]] - w_bar[e];
      if (row[k] > 0.0) positive = k + 1;
    }
    gp.positive_count[e] = positive;
    if (positive > 0) {
      const double smallest = row[positive - 1];
      if (!gp.delta_min || smallest < *gp.delta_min) gp.delta_min = smallest;
    }
  }
  return gp;
}

DecompositionReport decomposition_check(const Matroid& m,
                                        const WeightVector& w_bar,
                                        const ItemSet& chosen_basis) {
  const GapProfile gp = compute_gap_profile(m, w_bar);
  const ItemSet& a_star = gp.optimal_basis;
  const ExchangeBijection bij =
      construct_exchange_bijection(m, a_star, chosen_basis);
  const int K = static_cast<int>(a_star.size());

  DecompositionReport report;
  report.pi = bij.pi;
  report.value_difference = evaluate_modular(a_star, w_bar) -
                            evaluate_modular(chosen_basis, w_bar);
  std::vector<int> pairs_per_item(m.ground_set_size(), 0);
  for (int k = 0; k < K; ++k) {
    const int e = chosen_basis[k];
    const double gap = w_bar[a_star[bij.pi[k]]] - w_bar[e];
    report.pairing_sum += gap;
    if (!gp.is_optimal[e]) {
      ++report.paired_suboptimal;
      ++pairs_per_item[e];
      if (gap > 0.0) report.truncated_sum += gap;
    }
  }

  auto fail = [&](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };
  if (std::abs(report.pairing_sum - report.value_difference) >
      kTieTolerance * std::max(1.0, std::abs(report.value_difference))) {
    fail("paired gap sum does not match the expected-value difference");
  }
  if (report.truncated_sum < report.pairing_sum - kTieTolerance) {
    fail("dropping negative gaps decreased the sum");
  }
  if (report.paired_suboptimal > K) {
    fail("more than K suboptimal pairings");
  }
  for (int e = 0; e < m.ground_set_size(); ++e) {
    if (pairs_per_item[e] > 1) {
      fail("item " + std::to_string(e) + " paired more than once");
    }
  }
  return report;
}

double compute_gap_dependent_bound(const GapProfile& gp, double horizon) {
  if (!(horizon >= 1.0)) {
    throw InputError("compute_gap_dependent_bound: horizon must be >= 1");
  }
  const double log_n = std::log(horizon);
  const int L = static_cast<int>(gp.positive_count.size());
  double bound = 0.0;
  for (int e = 0; e < L; ++e) {
    const int k_e = gp.positive_count[e];
    if (k_e == 0) continue;
    bound += 16.0 / gp.gaps[e][k_e - 1] * log_n;
    for (int k = 0; k < k_e; ++k) {
      bound += gp.gaps[e][k] * (4.0 / 3.0) * kPi * kPi;
    }
  }
  return bound;
}

double compute_gap_free_bound(int ground_set_size, int rank, double horizon) {
  if (ground_set_size < 1 || rank < 1) {
    throw InputError("compute_gap_free_bound: L and K must be positive");
  }
  if (!(horizon >= 2.0)) {
    throw InputError("compute_gap_free_bound: horizon must be >= 2");
  }
  const double kl = static_cast<double>(rank) * ground_set_size;
  return 8.0 * std::sqrt(kl * horizon * std::log(horizon)) +
         (4.0 / 3.0) * kPi * kPi * kl;
}

}  // namespace matbandit
