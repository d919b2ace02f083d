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

#include "matbandit/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <ostream>

#include "matbandit/errors.hpp"
#include "matbandit/gaps.hpp"
#include "matbandit/greedy.hpp"
#include "matbandit/rng.hpp"

namespace matbandit {
namespace {

constexpr std::int64_t kFullTraceLimit = 10000;

bool record_episode(std::int64_t t, std::int64_t horizon,
                    std::int64_t& next_checkpoint) {
  if (t <= kFullTraceLimit || t == horizon) return true;
  if (t >= next_checkpoint) {
    next_checkpoint =
        std::max(next_checkpoint + 1,
                 static_cast<std::int64_t>(std::ceil(
                     static_cast<double>(next_checkpoint) * 1.1)));
    return true;
  }
  return false;
}

ReplicationResult run_one_replication(const RunConfig& cfg, int replication,
                                      const ItemSet& optimal_basis,
                                      double optimal_expected,
                                      const WeightVector& w_bar) {
  ReplicationResult result;
  result.replication = replication;
  result.seed = cfg.seed + static_cast<std::uint64_t>(replication);
  Rng rng(result.seed);

  std::unique_ptr<Policy> policy = make_policy(cfg.policy, cfg.environment);
  const WeightVector w0 = cfg.environment.draw_full(rng);
  policy->initialize(cfg.matroid, w0);

  double cum_realized = 0.0, cum_expected = 0.0;
  double cum_pseudo = 0.0, cum_realized_regret = 0.0;
  std::int64_t next_checkpoint = kFullTraceLimit + 1;
  if (cfg.horizon <= kFullTraceLimit) {
    result.trace.reserve(cfg.horizon);
  }
  for (std::int64_t t = 1; t <= cfg.horizon; ++t) {
    PolicyDecision decision = policy->select(cfg.matroid, rng);
    const WeightVector w_t = cfg.environment.draw_full(rng);
    const WeightMap observed = feedback(cfg.environment, w_t, decision.basis);
    policy->update(decision.basis, observed);

    EpisodeTrace trace;
    trace.episode = t;
    trace.realized_return = evaluate_modular(decision.basis, w_t);
    trace.expected_return = evaluate_modular(decision.basis, w_bar);
    trace.pseudo_regret_increment = optimal_expected - trace.expected_return;
    trace.realized_regret_increment =
        evaluate_modular(optimal_basis, w_t) - trace.realized_return;
    cum_realized += trace.realized_return;
    cum_expected += trace.expected_return;
    cum_pseudo += trace.pseudo_regret_increment;
    cum_realized_regret += trace.realized_regret_increment;
    trace.cum_realized_return = cum_realized;
    trace.cum_expected_return = cum_expected;
    trace.cum_pseudo_regret = cum_pseudo;
    trace.cum_realized_regret = cum_realized_regret;
    if (record_episode(t, cfg.horizon, next_checkpoint)) {
      trace.chosen = std::move(decision.basis);
      result.trace.push_back(std::move(trace));
    }
  }
  return result;
}

const EpisodeTrace& trace_at(const ReplicationResult& rep,
                             std::int64_t episode) {
  const auto it = std::lower_bound(
      rep.trace.begin(), rep.trace.end(), episode,
      [](const EpisodeTrace& t, std::int64_t e) { return t.episode < e; });
  if (it == rep.trace.end() || it->episode != episode) {
    throw InputError("episode " + std::to_string(episode) +
                     " was not recorded in the trace");
  }
  return *it;
}

void append_double(std::string& row, double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  row += buffer;
}

}  // namespace

std::string PolicySpec::name() const {
  switch (kind) {
    case Kind::omm: return "omm";
    case Kind::epsilon_greedy: return "epsilon_greedy";
    case Kind::optimal: return "optimal";
  }
  return "unknown";
}

void RunConfig::validate() const {
  if (environment.size() != matroid.ground_set_size()) {
    throw InputError(
        "config: environment has " + std::to_string(environment.size()) +
        " items but the matroid ground set has " +
        std::to_string(matroid.ground_set_size()));
  }
  if (horizon < 1) throw InputError("config: horizon must be >= 1");
  if (replications < 1) {
    throw InputError("config: replications must be >= 1");
  }
  if (policy.kind == PolicySpec::Kind::epsilon_greedy &&
      !(policy.epsilon >= 0.0 && policy.epsilon <= 1.0)) {
    throw InputError("config: epsilon must lie in [0,1]");
  }
}

std::unique_ptr<Policy> make_policy(const PolicySpec& spec,
                                    const WeightEnvironment& env) {
  switch (spec.kind) {
    case PolicySpec::Kind::omm:
      return std::make_unique<OmmPolicy>();
    case PolicySpec::Kind::epsilon_greedy:
      return std::make_unique<EpsilonGreedyPolicy>(spec.epsilon);
    case PolicySpec::Kind::optimal:
      return std::make_unique<OptimalPolicy>(env.mean_vector());
  }
  throw InputError("unknown policy kind");
}

RunResult run_episodes(const RunConfig& cfg) {
  cfg.validate();
  const WeightVector& w_bar = cfg.environment.mean_vector();
  RunResult result;
  result.optimal_basis = optimal_policy_select(cfg.matroid, w_bar).basis;
  result.optimal_value = evaluate_modular(result.optimal_basis, w_bar);
  result.policy_name = cfg.policy.name();
  result.replications.resize(cfg.replications);

  std::vector<std::future<ReplicationResult>> futures;
  futures.reserve(cfg.replications);
  for (int r = 0; r < cfg.replications; ++r) {
    futures.push_back(std::async(std::launch::async, [&, r] {
      return run_one_replication(cfg, r, result.optimal_basis,
                                 result.optimal_value, w_bar);
    }));
  }
  for (int r = 0; r < cfg.replications; ++r) {
    result.replications[r] = futures[r].get();
  }
  return result;
}

double mean_cum_pseudo_regret(const RunResult& result, std::int64_t episode) {
  double total = 0.0;
  for (const auto& rep : result.replications) {
    total += trace_at(rep, episode).cum_pseudo_regret;
  }
  return total / static_cast<double>(result.replications.size());
}

double mean_per_step_return(const RunResult& result, std::int64_t episode) {
  double total = 0.0;
  for (const auto& rep : result.replications) {
    total += trace_at(rep, episode).cum_realized_return /
             static_cast<double>(episode);
  }
  return total / static_cast<double>(result.replications.size());
}

void write_trace_csv(const RunResult& result, std::ostream& out) {
  out << "episode,policy,replication,realized_return,expected_return,"
         "pseudo_regret_cum,realized_regret_cum,per_step_return\n";
  std::string row;
  for (const auto& rep : result.replications) {
    for (const auto& t : rep.trace) {
      row.clear();
      row += std::to_string(t.episode);
      row += ',';
      row += result.policy_name;
      row += ',';
      row += std::to_string(rep.replication);
      row += ',';
      append_double(row, t.realized_return);
      row += ',';
      append_double(row, t.expected_return);
      row += ',';
      append_double(row, t.cum_pseudo_regret);
      row += ',';
      append_double(row, t.cum_realized_regret);
      row += ',';
      append_double(row, t.cum_realized_return /
                             static_cast<double>(t.episode));
      row += '\n';
      out << row;
    }
  }
}

InstrumentationSummary run_omm_instrumented(const Matroid& m,
                                            const WeightEnvironment& env,
                                            std::int64_t horizon,
                                            std::uint64_t seed) {
  const WeightVector& w_bar = env.mean_vector();
  const GapProfile gp = compute_gap_profile(m, w_bar);
  InstrumentationSummary summary;
  Rng rng(seed);
  BanditState st = omm_initialize(m, env.draw_full(rng));
  for (std::int64_t t = 1; t <= horizon; ++t) {
    const PolicyDecision decision = omm_select(m, st);
    const WeightVector& ucb = *decision.ucb_values;
    const ExchangeBijection bij =
        construct_exchange_bijection(m, gp.optimal_basis, decision.basis);
    for (std::size_t k = 0; k < decision.basis.size(); ++k) {
      const int e = decision.basis[k];
      if (gp.is_optimal[e]) continue;
      ++summary.pairs_checked;
      if (ucb[e] < ucb[gp.optimal_basis[bij.pi[k]]]) {
        ++summary.ucb_dominance_violations;
      }
    }
    if (!decomposition_check(m, w_bar, decision.basis).ok) {
      ++summary.decomposition_failures;
    }
    const WeightVector w_t = env.draw_full(rng);
    omm_update(st, decision.basis, feedback(env, w_t, decision.basis));
    ++summary.episodes;
  }
  return summary;
}

}  // namespace matbandit
