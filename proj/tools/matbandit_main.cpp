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

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "matbandit/config.hpp"
#include "matbandit/errors.hpp"
#include "matbandit/gaps.hpp"
#include "matbandit/instances.hpp"
#include "matbandit/loaders.hpp"
#include "matbandit/simulate.hpp"
#include "matbandit/verify.hpp"

namespace {

using matbandit::RunConfig;
using nlohmann::json;

int cmd_run(const std::string& config_path) {
  RunConfig cfg = matbandit::load_run_config(config_path);
  const auto start = std::chrono::steady_clock::now();
  matbandit::RunResult result = matbandit::run_episodes(cfg);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const auto paths = matbandit::write_run_outputs(cfg, result, seconds);
  std::cout << "policy: " << result.policy_name << "\n"
            << "optimal expected return: " << result.optimal_value << "\n"
            << "mean cumulative pseudo-regret at n=" << cfg.horizon << ": "
            << matbandit::mean_cum_pseudo_regret(result, cfg.horizon) << "\n"
            << "mean per-step return at n=" << cfg.horizon << ": "
            << matbandit::mean_per_step_return(result, cfg.horizon) << "\n"
            << "trace: " << paths.csv << "\n"
            << "manifest: " << paths.manifest << "\n";
  return 0;
}

int cmd_bounds(const std::string& config_path) {
  RunConfig cfg = matbandit::load_run_config(config_path);
  const auto gp = matbandit::compute_gap_profile(
      cfg.matroid, cfg.environment.mean_vector());
  std::cout << "L: " << cfg.matroid.ground_set_size() << "\n"
            << "K: " << cfg.matroid.rank() << "\n";
  if (gp.delta_min) {
    std::cout << "delta_min: " << *gp.delta_min << "\n";
  } else {
    std::cout << "delta_min: (no positive gaps)\n";
  }
  std::cout << "gap_dependent_bound(n=" << cfg.horizon << "): "
            << matbandit::compute_gap_dependent_bound(
                   gp, static_cast<double>(cfg.horizon))
            << "\n";
  if (cfg.horizon >= 2) {
    std::cout << "gap_free_bound(n=" << cfg.horizon << "): "
              << matbandit::compute_gap_free_bound(
                     cfg.matroid.ground_set_size(), cfg.matroid.rank(),
                     static_cast<double>(cfg.horizon))
              << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& config_path) {
  RunConfig cfg = matbandit::load_run_config(config_path);
  matbandit::Rng rng(cfg.seed);
  const auto results = matbandit::run_verification_suites(cfg.matroid, rng);
  bool all_passed = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " ("
              << r.cases << " cases)";
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << "\n";
    all_passed = all_passed && r.passed;
  }
  return all_passed ? 0 : 2;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw matbandit::InputError("cannot write " + path);
  out << text;
}

json default_run_fields(std::int64_t horizon, std::uint64_t seed,
                        int replications, const std::string& output) {
  json j;
  j["policy"] = {{"name", "omm"}};
  j["horizon"] = horizon;
  j["seed"] = seed;
  j["replications"] = replications;
  j["output"] = output;
  return j;
}

int cmd_generate(const std::string& family, int items, int rank, double delta,
                 int vertices, int edges, std::uint64_t seed,
                 std::int64_t horizon, int replications,
                 const std::string& out_path, const std::string& raw_format) {
  matbandit::Rng rng(seed);
  json config = default_run_fields(horizon, seed, 20, "out/" + family);
  config["replications"] = replications;

  if (family == "partition") {
    const auto instance =
        matbandit::generate_lower_bound_instance(items, rank, delta);
    config["matroid"] = matbandit::matroid_to_json(instance.matroid);
    config["environment"] =
        matbandit::environment_to_json(instance.environment);
    std::cout << "lower-bound slope (L-K)/(4 delta): "
              << instance.asymptotic_slope << "\n";
  } else if (family == "graphic") {
    const matbandit::Matroid m =
        matbandit::random_connected_graphic(vertices, edges, rng);
    if (raw_format == "edge_list_graph") {
      // Latencies in [1, 16]; the loader rebuilds the same matroid shape.
      std::string text = "# u v mean_latency\n";
      const auto& fam = std::get<matbandit::GraphicFamily>(m.family());
      for (const auto& [u, v] : fam.edges) {
        text += std::to_string(u) + " " + std::to_string(v) + " " +
                std::to_string(1.0 + 15.0 * rng.uniform01()) + "\n";
      }
      write_text(out_path, text);
      std::cout << "wrote " << out_path << "\n";
      return 0;
    }
    config["matroid"] = matbandit::matroid_to_json(m);
    config["environment"] = matbandit::environment_to_json(
        matbandit::random_bernoulli_environment(m.ground_set_size(), rng));
  } else if (family == "uniform" || family == "transversal" ||
             family == "linear") {
    const auto kind = family == "uniform"
                          ? matbandit::FamilyKind::uniform
                          : (family == "transversal"
                                 ? matbandit::FamilyKind::transversal
                                 : matbandit::FamilyKind::linear);
    const matbandit::Matroid m = matbandit::random_matroid(kind, items, rng);
    config["matroid"] = matbandit::matroid_to_json(m);
    config["environment"] = matbandit::environment_to_json(
        matbandit::random_bernoulli_environment(m.ground_set_size(), rng));
  } else if (family == "reward_rows") {
    const int rows = std::max(2, items / 2);
    std::string text =
        std::to_string(rows) + " " + std::to_string(items) + "\n";
    for (int r = 0; r < rows; ++r) {
      for (int e = 0; e < items; ++e) {
        text += (e ? " " : "") + std::to_string(rng.uniform01());
      }
      text += "\n";
    }
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_text(out_path, text);
      std::cout << "wrote " << out_path << "\n";
    }
    return 0;
  } else {
    std::cerr << "unknown family: " << family << "\n";
    return 1;
  }

  if (out_path.empty()) {
    std::cout << config.dump(2) << "\n";
  } else {
    write_text(out_path, config.dump(2) + "\n");
    std::cout << "wrote " << out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid semi-bandit simulator"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "execute a run config");
  run->add_option("config", config_path, "JSON run config")->required();

  auto* bounds =
      app.add_subcommand("bounds", "print regret envelopes for a config");
  bounds->add_option("config", config_path, "JSON run config")->required();

  auto* verify =
      app.add_subcommand("verify", "run the invariant suites for a config");
  verify->add_option("config", config_path, "JSON run config")->required();

  std::string family, out_path, raw_format;
  int items = 20, rank = 4, vertices = 20, edges = 50, replications = 20;
  double delta = 0.1;
  std::uint64_t seed = 1;
  std::int64_t horizon = 10000;
  auto* generate =
      app.add_subcommand("generate", "emit a synthetic instance");
  generate->add_option("family", family,
                       "partition|uniform|graphic|transversal|linear|"
                       "reward_rows")
      ->required();
  generate->add_option("--L,--items", items, "ground set size");
  generate->add_option("--K,--rank", rank, "rank (partition blocks)");
  generate->add_option("--delta", delta, "partition gap in (0, 0.5)");
  generate->add_option("--vertices", vertices, "graphic: vertex count");
  generate->add_option("--edges", edges, "graphic: edge count");
  generate->add_option("--seed", seed, "generator seed");
  generate->add_option("--horizon", horizon, "episodes in the emitted config");
  generate->add_option("--replications", replications, "replication count");
  generate->add_option("--out", out_path, "output file (stdout if omitted)");
  generate->add_option("--raw", raw_format,
                       "write a loader text format instead of a config "
                       "(edge_list_graph)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (run->parsed()) return cmd_run(config_path);
    if (bounds->parsed()) return cmd_bounds(config_path);
    if (verify->parsed()) return cmd_verify(config_path);
    if (generate->parsed()) {
      return cmd_generate(family, items, rank, delta, vertices, edges, seed,
                          horizon, replications, out_path, raw_format);
    }
  } catch (const matbandit::AxiomViolation& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
