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

#ifndef MATBANDIT_SIMULATE_HPP_
#define MATBANDIT_SIMULATE_HPP_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "matbandit/environment.hpp"
#include "matbandit/matroid.hpp"
#include "matbandit/policies.hpp"

namespace matbandit {

struct PolicySpec {
  enum class Kind { omm, epsilon_greedy, optimal };
  Kind kind = Kind::omm;
  double epsilon = 0.1;

  std::string name() const;
};

struct RunConfig {
  Matroid matroid;
  WeightEnvironment environment;
  PolicySpec policy;
  std::int64_t horizon = 1;
  std::uint64_t seed = 0;
  int replications = 1;
  std::string output_path;  // prefix for CSV + manifest; may be empty

  void validate() const;
};

struct EpisodeTrace {
  std::int64_t episode = 0;
  ItemSet chosen;
  double realized_return = 0.0;
  double expected_return = 0.0;
  double pseudo_regret_increment = 0.0;
  double realized_regret_increment = 0.0;
  double cum_realized_return = 0.0;
  double cum_expected_return = 0.0;
  double cum_pseudo_regret = 0.0;
  double cum_realized_regret = 0.0;
};

struct ReplicationResult {
  int replication = 0;
  std::uint64_t seed = 0;
  std::vector<EpisodeTrace> trace;
};

struct RunResult {
  ItemSet optimal_basis;
  double optimal_value = 0.0;
  std::string policy_name;
  std::vector<ReplicationResult> replications;
};

// Runs all replications (concurrently; each owns its RNG and trace buffer,
// seeded seed + replication index). Full per-episode traces up to 10^4
// episodes; geometric checkpoints (factor 1.1) beyond, final episode always
// recorded.
RunResult run_episodes(const RunConfig& cfg);

std::unique_ptr<Policy> make_policy(const PolicySpec& spec,
                                    const WeightEnvironment& env);

// Mean over replications at a recorded episode; throws if that episode was
// not checkpointed.
double mean_cum_pseudo_regret(const RunResult& result, std::int64_t episode);
double mean_per_step_return(const RunResult& result, std::int64_t episode);

// CSV with the fixed schema
// episode,policy,replication,realized_return,expected_return,
// pseudo_regret_cum,realized_regret_cum,per_step_return
// and floats at 12 significant digits.
void write_trace_csv(const RunResult& result, std::ostream& out);

// Per-episode audit of an OMM run: the exchange-bijection pairing must have
// the chosen item's UCB at or above its paired optimal item's UCB, and the
// regret decomposition must verify.
struct InstrumentationSummary {
  std::int64_t episodes = 0;
  std::int64_t pairs_checked = 0;
  std::int64_t ucb_dominance_violations = 0;
  std::int64_t decomposition_failures = 0;
};

InstrumentationSummary run_omm_instrumented(const Matroid& m,
                                            const WeightEnvironment& env,
                                            std::int64_t horizon,
                                            std::uint64_t seed);

}  // namespace matbandit

#endif  // MATBANDIT_SIMULATE_HPP_
