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
//
// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// run with a number 1..9 to execute a single criterion, or no argument for
// the whole battery.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "matbandit/config.hpp"
#include "matbandit/gaps.hpp"
#include "matbandit/instances.hpp"
#include "matbandit/simulate.hpp"
#include "matbandit/verify.hpp"

using namespace matbandit;

namespace {

constexpr FamilyKind kAllFamilies[] = {
    FamilyKind::uniform, FamilyKind::partition, FamilyKind::graphic,
    FamilyKind::transversal, FamilyKind::linear};

struct Outcome {
  bool passed = false;
  std::string detail;
};

WeightVector random_unit_weights(int n, Rng& rng) {
  WeightVector w(n);
  for (double& x : w) x = rng.uniform01();
  return w;
}

// The fixed graphic test bed: a random connected graph on 20 vertices with
// 50 edges and the latency environment over expected latencies in [1, 16].
struct GraphicBed {
  Matroid matroid;
  WeightEnvironment environment;
};

const GraphicBed& graphic_test_bed() {
  static const GraphicBed bed = [] {
    Rng rng(20260811);
    Matroid m = random_connected_graphic(20, 50, rng);
    std::vector<double> latencies(50);
    for (double& mu : latencies) mu = 1.0 + 15.0 * rng.uniform01();
    return GraphicBed{
        std::move(m),
        WeightEnvironment::clipped_shifted_exponential(std::move(latencies))};
  }();
  return bed;
}

RunResult run_policy(const Matroid& m, const WeightEnvironment& env,
                     PolicySpec::Kind kind, std::int64_t horizon,
                     std::uint64_t seed, int replications) {
  RunConfig cfg{m, env, PolicySpec{kind, 0.1}, horizon, seed, replications,
                ""};
  return run_episodes(cfg);
}

// 1. Greedy weight equals the brute-force maximum on 200 random instances
//    across all five families (L <= 12), within 1e-12.
Outcome criterion_1() {
  Rng rng(101);
  int checked = 0;
  for (int round = 0; round < 40; ++round) {
    for (const FamilyKind kind : kAllFamilies) {
      const int n = 4 + rng.uniform_int(9);  // L in [4, 12]
      const Matroid m = random_matroid(kind, n, rng);
      const WeightVector w = random_unit_weights(n, rng);
      const double greedy = evaluate_modular(greedy_max_basis(m, w), w);
      const double exact = brute_force_max_basis(m, w).weight;
      ++checked;
      if (std::abs(greedy - exact) > 1e-12) {
        return {false, "mismatch on " + std::string(m.family_name()) +
                           " L=" + std::to_string(n) + ": greedy " +
                           std::to_string(greedy) + " vs " +
                           std::to_string(exact)};
      }
    }
  }
  return {true, std::to_string(checked) + " instances, exact agreement"};
}

// 2. Exhaustive matroid-axiom verification on every test instance with
//    L <= 10.
Outcome criterion_2() {
  Rng rng(202);
  std::vector<Matroid> instances;
  instances.push_back(Matroid::graphic(3, {{0, 1}, {1, 2}, {0, 2}}));
  instances.push_back(Matroid::graphic(3, {{0, 0}, {0, 1}, {1, 2}, {1, 2}}));
  instances.push_back(Matroid::partition({0, 0, 1, 1, 1}, {1, 2}));
  instances.push_back(Matroid::linear(2, {{1, 0}, {0, 1}, {1, 1}, {2, 2}}));
  instances.push_back(Matroid::transversal(2, {{0}, {0, 1}, {0}}));
  for (const FamilyKind kind : kAllFamilies) {
    for (int t = 0; t < 4; ++t) {
      instances.push_back(random_matroid(kind, 4 + rng.uniform_int(7), rng));
    }
  }
  std::int64_t cases = 0;
  for (const Matroid& m : instances) {
    const CheckResult result = check_matroid_axioms(m);
    cases += result.cases;
    if (!result.passed) {
      return {false, std::string(m.family_name()) + ": " + result.detail};
    }
  }
  return {true, std::to_string(instances.size()) + " instances, " +
                    std::to_string(cases) + " axiom cases, zero violations"};
}

// 3. Exchange bijection on 1000 random base pairs: bijectivity, fixed
//    points, prefix-independence, and the gap-sum identity within 1e-9.
Outcome criterion_3() {
  Rng rng(303);
  int pairs = 0;
  while (pairs < 1000) {
    const FamilyKind kind = kAllFamilies[rng.uniform_int(5)];
    const int n = 5 + rng.uniform_int(8);  // L in [5, 12]
    const Matroid m = random_matroid(kind, n, rng);
    const int k_rank = m.rank();
    const WeightVector w_bar = random_unit_weights(n, rng);
    for (int i = 0; i < 20 && pairs < 1000; ++i, ++pairs) {
      const ItemSet reference = random_basis(m, rng);
      const ItemSet chosen = random_basis(m, rng);
      const ExchangeBijection bij =
          construct_exchange_bijection(m, reference, chosen);
      std::vector<char> used(k_rank, 0);
      double paired_gaps = 0.0;
      for (int k = 0; k < k_rank; ++k) {
        const int idx = bij.pi[k];
        if (idx < 0 || idx >= k_rank || used[idx]) {
          return {false, "pi is not a bijection"};
        }
        used[idx] = 1;
        const auto shared =
            std::find(reference.begin(), reference.end(), chosen[k]);
        if (shared != reference.end() &&
            idx != static_cast<int>(shared - reference.begin())) {
          return {false, "shared item not a fixed point"};
        }
        ItemSet prefix(chosen.begin(), chosen.begin() + k);
        prefix.push_back(reference[idx]);
        if (!is_independent(m, prefix)) {
          return {false, "prefix independence failed at k=" +
                             std::to_string(k)};
        }
        paired_gaps += w_bar[reference[idx]] - w_bar[chosen[k]];
      }
      const double difference = evaluate_modular(reference, w_bar) -
                                evaluate_modular(chosen, w_bar);
      if (std::abs(paired_gaps - difference) > 1e-9) {
        return {false, "gap-sum identity off by " +
                           std::to_string(paired_gaps - difference)};
      }
    }
  }
  return {true, "1000 base pairs, all invariants hold"};
}

// 4. Gap-dependent envelope on the partition bandit (L=20, K=4, delta=0.1)
//    at n = 10^4 over 20 replications, plus the sublinearity check.
Outcome criterion_4() {
  const auto instance = generate_lower_bound_instance(20, 4, 0.1);
  const GapProfile gp = compute_gap_profile(
      instance.matroid, instance.environment.mean_vector());
  const double bound = compute_gap_dependent_bound(gp, 1e4);
  const RunResult omm =
      run_policy(instance.matroid, instance.environment,
                 PolicySpec::Kind::omm, 10000, 404, 20);
  const double at_full = mean_cum_pseudo_regret(omm, 10000);
  const double at_half = mean_cum_pseudo_regret(omm, 5000);
  std::ostringstream detail;
  detail << "regret(1e4)=" << at_full << " bound=" << bound
         << " halves=" << at_half << "/" << at_full - at_half;
  if (!(at_full >= 0.0 && at_full <= bound)) {
    return {false, "envelope violated: " + detail.str()};
  }
  // The envelope also holds at the earlier checkpoints.
  for (const std::int64_t n : {std::int64_t{100}, std::int64_t{1000}}) {
    const double regret = mean_cum_pseudo_regret(omm, n);
    const double early_bound =
        compute_gap_dependent_bound(gp, static_cast<double>(n));
    if (!(regret >= 0.0 && regret <= early_bound)) {
      return {false, "envelope violated at n=" + std::to_string(n) +
                         ": regret " + std::to_string(regret) + " > " +
                         std::to_string(early_bound)};
    }
  }
  if (!(at_full - at_half < at_half)) {
    return {false, "not sublinear: " + detail.str()};
  }
  return {true, detail.str()};
}

// 5. Baseline separation at n = 10^3 (20 replications each) on the
//    partition bandit and on the graphic test bed.
Outcome criterion_5() {
  const auto instance = generate_lower_bound_instance(20, 4, 0.1);
  const RunResult omm_p =
      run_policy(instance.matroid, instance.environment,
                 PolicySpec::Kind::omm, 1000, 505, 20);
  const RunResult eps_p =
      run_policy(instance.matroid, instance.environment,
                 PolicySpec::Kind::epsilon_greedy, 1000, 605, 20);
  const double omm_partition = mean_per_step_return(omm_p, 1000);
  const double eps_partition = mean_per_step_return(eps_p, 1000);

  const GraphicBed& bed = graphic_test_bed();
  const RunResult omm_g = run_policy(bed.matroid, bed.environment,
                                     PolicySpec::Kind::omm, 1000, 705, 20);
  const RunResult eps_g =
      run_policy(bed.matroid, bed.environment,
                 PolicySpec::Kind::epsilon_greedy, 1000, 805, 20);
  const double omm_graphic = mean_per_step_return(omm_g, 1000);
  const double eps_graphic = mean_per_step_return(eps_g, 1000);

  std::ostringstream detail;
  detail << "partition omm=" << omm_partition << " eps=" << eps_partition
         << "; graphic omm=" << omm_graphic << " eps=" << eps_graphic;
  const bool passed =
      omm_partition > eps_partition && omm_graphic > eps_graphic;
  return {passed, detail.str()};
}

// 6. OMM per-step return within 5% of the optimum at n = 10^4 on the
//    graphic test bed.
Outcome criterion_6() {
  const GraphicBed& bed = graphic_test_bed();
  const WeightVector& w_bar = bed.environment.mean_vector();
  const double optimal_value = evaluate_modular(
      optimal_policy_select(bed.matroid, w_bar).basis, w_bar);
  const RunResult omm = run_policy(bed.matroid, bed.environment,
                                   PolicySpec::Kind::omm, 10000, 606, 20);
  const double per_step = mean_per_step_return(omm, 10000);
  std::ostringstream detail;
  detail << "per-step=" << per_step << " optimum=" << optimal_value
         << " threshold=" << 0.95 * optimal_value;
  return {per_step >= 0.95 * optimal_value, detail.str()};
}

// 7. Gap-free envelope at n in {10^3, 10^4} on ten random instances.
Outcome criterion_7() {
  Rng rng(707);
  std::ostringstream detail;
  for (int i = 0; i < 10; ++i) {
    const FamilyKind kind = kAllFamilies[i % 5];
    Matroid m = random_matroid(kind, 6 + rng.uniform_int(11), rng);
    while (m.rank() < 1) {
      m = random_matroid(kind, 6 + rng.uniform_int(11), rng);
    }
    const WeightEnvironment env =
        random_bernoulli_environment(m.ground_set_size(), rng);
    const RunResult omm = run_policy(m, env, PolicySpec::Kind::omm, 10000,
                                     1000 + i, 20);
    for (const std::int64_t n : {std::int64_t{1000}, std::int64_t{10000}}) {
      const double regret = mean_cum_pseudo_regret(omm, n);
      const double bound = compute_gap_free_bound(
          m.ground_set_size(), m.rank(), static_cast<double>(n));
      if (regret > bound) {
        detail << m.family_name() << " L=" << m.ground_set_size()
               << " K=" << m.rank() << " n=" << n << ": regret " << regret
               << " > bound " << bound;
        return {false, detail.str()};
      }
    }
  }
  return {true, "10 instances within the gap-free envelope at n=1e3, 1e4"};
}

// 8. UCB dominance along the bijection pairing in an instrumented OMM run
//    of 10^3 episodes.
Outcome criterion_8() {
  const auto instance = generate_lower_bound_instance(20, 4, 0.1);
  const InstrumentationSummary summary = run_omm_instrumented(
      instance.matroid, instance.environment, 1000, 808);
  std::ostringstream detail;
  detail << summary.pairs_checked << " paired suboptimal choices, "
         << summary.ucb_dominance_violations << " dominance violations, "
         << summary.decomposition_failures << " decomposition failures";
  const bool passed = summary.episodes == 1000 &&
                      summary.ucb_dominance_violations == 0 &&
                      summary.decomposition_failures == 0;
  return {passed, detail.str()};
}

// 9. Byte-identical CSV output across two runs of the same config.
Outcome criterion_9() {
  const auto instance = generate_lower_bound_instance(10, 2, 0.1);
  const auto dir = std::filesystem::temp_directory_path() / "mb_acceptance";
  std::filesystem::create_directories(dir);
  auto run_to = [&](const std::string& name) {
    RunConfig cfg{instance.matroid, instance.environment,
                  PolicySpec{PolicySpec::Kind::omm, 0.1}, 500, 909, 3,
                  (dir / name).string()};
    const RunResult result = run_episodes(cfg);
    const auto paths = write_run_outputs(cfg, result, 0.0);
    std::ifstream in(paths.csv, std::ios::binary);
    std::ostringstream bytes;
    bytes << in.rdbuf();
    return bytes.str();
  };
  const std::string first = run_to("first");
  const std::string second = run_to("second");
  std::filesystem::remove_all(dir);
  if (first.empty()) return {false, "no CSV bytes written"};
  if (first != second) return {false, "CSV outputs differ"};
  return {true, std::to_string(first.size()) + " CSV bytes, identical"};
}

using CriterionFn = Outcome (*)();

struct Criterion {
  int number;
  const char* summary;
  CriterionFn fn;
};

const Criterion kCriteria[] = {
    {1, "greedy optimality vs brute force", criterion_1},
    {2, "matroid axioms, exhaustive", criterion_2},
    {3, "exchange bijection invariants", criterion_3},
    {4, "gap-dependent regret envelope + sublinearity", criterion_4},
    {5, "baseline separation at n=1e3", criterion_5},
    {6, "convergence to the optimum at n=1e4", criterion_6},
    {7, "gap-free regret envelope", criterion_7},
    {8, "UCB dominance instrumentation", criterion_8},
    {9, "byte-identical CSV determinism", criterion_9},
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  if (argc > 1) {
    selected = std::atoi(argv[1]);
    if (selected < 1 || selected > 9) {
      std::cerr << "usage: " << argv[0] << " [1-9]\n";
      return 2;
    }
  }
  int failures = 0;
  for (const Criterion& c : kCriteria) {
    if (selected != 0 && c.number != selected) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.fn();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    std::cout << (outcome.passed ? "[PASS] " : "[FAIL] ") << "criterion "
              << c.number << ": " << c.summary << " (" << outcome.detail
              << ") [" << seconds << "s]\n";
    if (!outcome.passed) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
