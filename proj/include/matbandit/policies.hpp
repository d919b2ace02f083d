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

#ifndef MATBANDIT_POLICIES_HPP_
#define MATBANDIT_POLICIES_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "matbandit/environment.hpp"
#include "matbandit/greedy.hpp"
#include "matbandit/matroid.hpp"
#include "matbandit/rng.hpp"

namespace matbandit {

// Per-item pull counts and running means. episode is the index of the last
// completed episode (0 right after initialization).
struct BanditState {
  std::vector<std::int64_t> counts;
  std::vector<double> means;
  std::int64_t episode = 0;

  bool initialized() const { return !counts.empty(); }
};

struct PolicyDecision {
  ItemSet basis;  // insertion order of the greedy construction
  std::optional<WeightVector> ucb_values;
};

// sqrt(2 ln(t) / pulls), with ln clamped to zero for t in {0, 1} so the
// first episode runs on the initialization observation alone.
double confidence_radius(std::int64_t t, std::int64_t pulls);

// One full observation seeds every item with count 1.
BanditState omm_initialize(const Matroid& m, const WeightVector& w0);

// Greedy maximum-weight basis with respect to the per-item UCBs.
PolicyDecision omm_select(const Matroid& m, const BanditState& st);

// Incremental mean update for the observed basis items; advances episode.
// observed must cover exactly the basis.
void omm_update(BanditState& st, const ItemSet& basis,
                const WeightMap& observed);

// Builds a basis step by step; each step explores uniformly over the
// currently addable items with probability epsilon, otherwise takes the
// addable item with the highest empirical mean (ties by ascending index).
PolicyDecision epsilon_greedy_select(const Matroid& m, const BanditState& st,
                                     double epsilon, Rng& rng);

// Greedy on the true means; simulator-only.
PolicyDecision optimal_policy_select(const Matroid& m,
                                     const WeightVector& w_bar);

// Per-episode policy interface for the simulation loop. Implementations own
// their state; one instance per replication.
class Policy {
 public:
  virtual ~Policy() = default;
  virtual void initialize(const Matroid& m, const WeightVector& w0) = 0;
  virtual PolicyDecision select(const Matroid& m, Rng& rng) = 0;
  virtual void update(const ItemSet& basis, const WeightMap& observed) = 0;
  virtual std::string name() const = 0;
};

class OmmPolicy : public Policy {
 public:
  void initialize(const Matroid& m, const WeightVector& w0) override;
  PolicyDecision select(const Matroid& m, Rng& rng) override;
  void update(const ItemSet& basis, const WeightMap& observed) override;
  std::string name() const override { return "omm"; }

  const BanditState& state() const { return state_; }

 private:
  BanditState state_;
};

class EpsilonGreedyPolicy : public Policy {
 public:
  explicit EpsilonGreedyPolicy(double epsilon);
  void initialize(const Matroid& m, const WeightVector& w0) override;
  PolicyDecision select(const Matroid& m, Rng& rng) override;
  void update(const ItemSet& basis, const WeightMap& observed) override;
  std::string name() const override { return "epsilon_greedy"; }

 private:
  double epsilon_;
  BanditState state_;
};

class OptimalPolicy : public Policy {
 public:
  explicit OptimalPolicy(WeightVector w_bar);
  void initialize(const Matroid& m, const WeightVector& w0) override;
  PolicyDecision select(const Matroid& m, Rng& rng) override;
  void update(const ItemSet& basis, const WeightMap& observed) override;
  std::string name() const override { return "optimal"; }

 private:
  WeightVector w_bar_;
};

}  // namespace matbandit

#endif  // MATBANDIT_POLICIES_HPP_
