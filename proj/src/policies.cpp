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

#include "matbandit/policies.hpp"

#include <algorithm>
#include <cmath>

#include "matbandit/errors.hpp"

namespace matbandit {
namespace {

void check_state(const Matroid& m, const BanditState& st, const char* where) {
  if (!st.initialized()) {
    throw ContractViolation(std::string(where) + ": uninitialized state");
  }
  if (static_cast<int>(st.counts.size()) != m.ground_set_size()) {
    throw ContractViolation(std::string(where) +
                            ": state sized for a different ground set");
  }
}

}  // namespace

double confidence_radius(std::int64_t t, std::int64_t pulls) {
  if (pulls < 1) {
    throw ContractViolation("confidence_radius: pull count must be >= 1");
  }
  const double log_t =
      t >= 2 ? std::log(static_cast<double>(t)) : 0.0;
  return std::sqrt(2.0 * log_t / static_cast<double>(pulls));
}

BanditState omm_initialize(const Matroid& m, const WeightVector& w0) {
  if (static_cast<int>(w0.size()) != m.ground_set_size()) {
    throw InputError("omm_initialize: observation length mismatch");
  }
  BanditState st;
  st.counts.assign(m.ground_set_size(), 1);
  st.means = w0;
  st.episode = 0;
  return st;
}

PolicyDecision omm_select(const Matroid& m, const BanditState& st) {
  check_state(m, st, "omm_select");
  WeightVector ucb(st.means.size());
  for (std::size_t e = 0; e < ucb.size(); ++e) {
    ucb[e] = st.means[e] + confidence_radius(st.episode, st.counts[e]);
  }
  PolicyDecision decision;
  decision.basis = greedy_max_basis(m, ucb);
  decision.ucb_values = std::move(ucb);
  return decision;
}

void omm_update(BanditState& st, const ItemSet& basis,
                const WeightMap& observed) {
  if (!st.initialized()) {
    throw ContractViolation("omm_update: uninitialized state");
  }
  if (observed.size() != basis.size()) {
    throw FeedbackMismatch("omm_update: feedback does not match the basis");
  }
  for (int e : basis) {
    if (observed.find(e) == observed.end()) {
      throw FeedbackMismatch("omm_update: no observation for item " +
                             std::to_string(e));
    }
  }
  for (const auto& [e, x] : observed) {
    if (e < 0 || e >= static_cast<int>(st.counts.size())) {
      throw FeedbackMismatch("omm_update: observation for unknown item " +
                             std::to_string(e));
    }
    const std::int64_t n = ++st.counts[e];
    st.means[e] += (x - st.means[e]) / static_cast<double>(n);
  }
  ++st.episode;
}

PolicyDecision epsilon_greedy_select(const Matroid& m, const BanditState& st,
                                     double epsilon, Rng& rng) {
  check_state(m, st, "epsilon_greedy_select");
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw InputError("epsilon_greedy_select: epsilon outside [0,1]");
  }
  ExtensionOracle oracle(m);
  std::vector<char> chosen(m.ground_set_size(), 0);
  ItemSet addable;
  for (;;) {
    addable.clear();
    for (int e = 0; e < m.ground_set_size(); ++e) {
      if (!chosen[e] && oracle.can_add(e)) addable.push_back(e);
    }
    if (addable.empty()) break;
    int pick;
    if (rng.bernoulli(epsilon)) {
      pick = addable[rng.uniform_int(static_cast<int>(addable.size()))];
    } else {
      pick = addable[0];
      for (int e : addable) {
        if (st.means[e] > st.means[pick]) pick = e;
      }
    }
    oracle.add(pick);
    chosen[pick] = 1;
  }
  return PolicyDecision{oracle.items(), std::nullopt};
}

PolicyDecision optimal_policy_select(const Matroid& m,
                                     const WeightVector& w_bar) {
  return PolicyDecision{greedy_max_basis(m, w_bar), std::nullopt};
}

// ---------------------------------------------------------------------------

void OmmPolicy::initialize(const Matroid& m, const WeightVector& w0) {
  state_ = omm_initialize(m, w0);
}

PolicyDecision OmmPolicy::select(const Matroid& m, Rng&) {
  return omm_select(m, state_);
}

void OmmPolicy::update(const ItemSet& basis, const WeightMap& observed) {
  omm_update(state_, basis, observed);
}

EpsilonGreedyPolicy::EpsilonGreedyPolicy(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw InputError("EpsilonGreedyPolicy: epsilon outside [0,1]");
  }
}

void EpsilonGreedyPolicy::initialize(const Matroid& m,
                                     const WeightVector& w0) {
  state_ = omm_initialize(m, w0);
}

PolicyDecision EpsilonGreedyPolicy::select(const Matroid& m, Rng& rng) {
  return epsilon_greedy_select(m, state_, epsilon_, rng);
}

void EpsilonGreedyPolicy::update(const ItemSet& basis,
                                 const WeightMap& observed) {
  omm_update(state_, basis, observed);
}

OptimalPolicy::OptimalPolicy(WeightVector w_bar) : w_bar_(std::move(w_bar)) {}

void OptimalPolicy::initialize(const Matroid&, const WeightVector&) {}

PolicyDecision OptimalPolicy::select(const Matroid& m, Rng&) {
  return optimal_policy_select(m, w_bar_);
}

void OptimalPolicy::update(const ItemSet&, const WeightMap&) {}

}  // namespace matbandit
