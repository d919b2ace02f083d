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

#include "matbandit/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "matbandit/errors.hpp"
#include "matbandit/loaders.hpp"

namespace matbandit {
namespace {

using nlohmann::json;

[[noreturn]] void config_fail(const std::string& field,
                              const std::string& message) {
  throw InputError("config." + field + ": " + message);
}

const json& require(const json& j, const std::string& field,
                    const std::string& context) {
  if (!j.contains(field)) config_fail(context + field, "missing");
  return j.at(field);
}

template <typename T>
T require_as(const json& j, const std::string& field,
             const std::string& context) {
  try {
    return require(j, field, context).get<T>();
  } catch (const json::exception& e) {
    config_fail(context + field, e.what());
  }
}

}  // namespace

json matroid_to_json(const Matroid& m) {
  json j;
  j["family"] = std::string(m.family_name());
  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, UniformFamily>) {
          j["ground_set_size"] = m.ground_set_size();
          j["k"] = f.k;
        } else if constexpr (std::is_same_v<F, PartitionFamily>) {
          j["block_of"] = f.block_of;
          j["capacity_of"] = f.capacity_of;
        } else if constexpr (std::is_same_v<F, GraphicFamily>) {
          j["vertex_count"] = f.vertex_count;
          json edges = json::array();
          for (const auto& [u, v] : f.edges) edges.push_back({u, v});
          j["edges"] = std::move(edges);
        } else if constexpr (std::is_same_v<F, TransversalFamily>) {
          j["right_count"] = f.right_count;
          j["adjacency"] = f.adjacency;
        } else {
          j["dimension"] = f.dimension;
          j["columns"] = f.columns;
        }
      },
      m.family());
  return j;
}

Matroid matroid_from_json(const json& j) {
  const std::string context = "matroid.";
  const auto family = require_as<std::string>(j, "family", context);
  try {
    if (family == "uniform") {
      return Matroid::uniform(
          require_as<int>(j, "ground_set_size", context),
          require_as<int>(j, "k", context));
    }
    if (family == "partition") {
      return Matroid::partition(
          require_as<std::vector<int>>(j, "block_of", context),
          require_as<std::vector<int>>(j, "capacity_of", context));
    }
    if (family == "graphic") {
      const auto rows =
          require_as<std::vector<std::vector<int>>>(j, "edges", context);
      std::vector<std::pair<int, int>> edges;
      edges.reserve(rows.size());
      for (const auto& row : rows) {
        if (row.size() != 2) config_fail("matroid.edges", "edge needs 2 ends");
        edges.emplace_back(row[0], row[1]);
      }
      return Matroid::graphic(require_as<int>(j, "vertex_count", context),
                              std::move(edges));
    }
    if (family == "transversal") {
      return Matroid::transversal(
          require_as<int>(j, "right_count", context),
          require_as<std::vector<std::vector<int>>>(j, "adjacency", context));
    }
    if (family == "linear") {
      return Matroid::linear(
          require_as<int>(j, "dimension", context),
          require_as<std::vector<std::vector<long long>>>(j, "columns",
                                                          context));
    }
    if (family == "file") {
      const auto path = require_as<std::string>(j, "path", context);
      const auto format = parse_instance_format(
          require_as<std::string>(j, "format", context));
      LoadedInstance loaded = load_instance(path, format);
      if (!loaded.matroid) {
        config_fail("matroid", "instance file provides no matroid");
      }
      return std::move(*loaded.matroid);
    }
  } catch (const json::exception& e) {
    config_fail("matroid", e.what());
  }
  config_fail("matroid.family", "unknown family '" + family + "'");
}

json environment_to_json(const WeightEnvironment& env) {
  json j;
  j["kind"] = std::string(env.kind_name());
  std::visit(
      [&](const auto& e) {
        using E = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<E, BernoulliEnv>) {
          j["means"] = e.means;
        } else if constexpr (std::is_same_v<E, ClippedShiftedExponentialEnv>) {
          j["latencies"] = e.latencies;
        } else {
          j["rows"] = e.rows;
        }
      },
      env.family());
  return j;
}

WeightEnvironment environment_from_json(const json& j) {
  const std::string context = "environment.";
  const auto kind = require_as<std::string>(j, "kind", context);
  try {
    if (kind == "bernoulli") {
      return WeightEnvironment::bernoulli(
          require_as<std::vector<double>>(j, "means", context));
    }
    if (kind == "clipped_shifted_exponential") {
      return WeightEnvironment::clipped_shifted_exponential(
          require_as<std::vector<double>>(j, "latencies", context));
    }
    if (kind == "empirical_rows") {
      return WeightEnvironment::empirical_rows(
          require_as<std::vector<std::vector<double>>>(j, "rows", context));
    }
    if (kind == "file") {
      const auto path = require_as<std::string>(j, "path", context);
      const auto format = parse_instance_format(
          require_as<std::string>(j, "format", context));
      LoadedInstance loaded = load_instance(path, format);
      if (!loaded.environment) {
        config_fail("environment", "instance file provides no environment");
      }
      return std::move(*loaded.environment);
    }
  } catch (const json::exception& e) {
    config_fail("environment", e.what());
  }
  config_fail("environment.kind", "unknown kind '" + kind + "'");
}

RunConfig parse_run_config(const json& j) {
  if (!j.is_object()) throw InputError("config: expected a JSON object");

  const json& mj = require(j, "matroid", "");
  Matroid matroid = matroid_from_json(mj);

  // An instance file may supply the environment alongside the matroid.
  std::optional<WeightEnvironment> environment;
  const bool matroid_from_file =
      mj.contains("family") && mj.at("family") == "file";
  if (!j.contains("environment") ||
      (j.at("environment").contains("kind") &&
       j.at("environment").at("kind") == "from_instance")) {
    if (!matroid_from_file) {
      config_fail("environment",
                  "missing (only instance-file matroids imply one)");
    }
    LoadedInstance loaded = load_instance(
        require_as<std::string>(mj, "path", "matroid."),
        parse_instance_format(
            require_as<std::string>(mj, "format", "matroid.")));
    if (!loaded.environment) {
      config_fail("environment", "instance file provides no environment");
    }
    environment = std::move(loaded.environment);
  } else {
    environment = environment_from_json(j.at("environment"));
  }

  PolicySpec policy;
  const json& pj = require(j, "policy", "");
  const auto name = require_as<std::string>(pj, "name", "policy.");
  if (name == "omm") {
    policy.kind = PolicySpec::Kind::omm;
  } else if (name == "epsilon_greedy") {
    policy.kind = PolicySpec::Kind::epsilon_greedy;
    policy.epsilon = pj.contains("epsilon")
                         ? require_as<double>(pj, "epsilon", "policy.")
                         : 0.1;
  } else if (name == "optimal") {
    policy.kind = PolicySpec::Kind::optimal;
  } else {
    config_fail("policy.name", "unknown policy '" + name + "'");
  }

  RunConfig cfg{std::move(matroid), std::move(*environment), policy,
                require_as<std::int64_t>(j, "horizon", ""),
                require_as<std::uint64_t>(j, "seed", ""),
                require_as<int>(j, "replications", ""),
                j.contains("output")
                    ? require_as<std::string>(j, "output", "")
                    : std::string()};
  cfg.validate();
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("config file " + path + ": " + e.what());
  }
  return parse_run_config(j);
}

json config_to_json(const RunConfig& cfg) {
  json j;
  j["matroid"] = matroid_to_json(cfg.matroid);
  j["environment"] = environment_to_json(cfg.environment);
  json pj;
  pj["name"] = cfg.policy.name();
  if (cfg.policy.kind == PolicySpec::Kind::epsilon_greedy) {
    pj["epsilon"] = cfg.policy.epsilon;
  }
  j["policy"] = std::move(pj);
  j["horizon"] = cfg.horizon;
  j["seed"] = cfg.seed;
  j["replications"] = cfg.replications;
  j["output"] = cfg.output_path;
  return j;
}

json build_manifest(const RunConfig& cfg, const RunResult& result,
                    double wall_clock_seconds) {
  json manifest;
  manifest["tool"] = "matbandit";
  manifest["version"] = kVersion;
  manifest["config"] = config_to_json(cfg);
  json seeds = json::array();
  for (const auto& rep : result.replications) seeds.push_back(rep.seed);
  manifest["replication_seeds"] = std::move(seeds);
  manifest["mean_vector"] = cfg.environment.mean_vector();
  manifest["optimal_basis"] = result.optimal_basis;
  manifest["optimal_value"] = result.optimal_value;
  manifest["wall_clock_seconds"] = wall_clock_seconds;
  return manifest;
}

RunOutputPaths write_run_outputs(const RunConfig& cfg, const RunResult& result,
                                 double wall_clock_seconds) {
  namespace fs = std::filesystem;
  if (cfg.output_path.empty()) {
    throw InputError("config.output: missing output path");
  }
  fs::path prefix(cfg.output_path);
  if (const char* dir = std::getenv("MATBANDIT_OUTPUT_DIR");
      dir != nullptr && *dir != '\0') {
    prefix = fs::path(dir) / prefix.filename();
  }
  if (prefix.has_parent_path()) {
    fs::create_directories(prefix.parent_path());
  }
  RunOutputPaths paths{prefix.string() + ".csv",
                       prefix.string() + ".manifest.json"};
  {
    std::ofstream csv(paths.csv, std::ios::binary);
    if (!csv) throw InputError("cannot write " + paths.csv);
    write_trace_csv(result, csv);
  }
  {
    std::ofstream mf(paths.manifest, std::ios::binary);
    if (!mf) throw InputError("cannot write " + paths.manifest);
    mf << build_manifest(cfg, result, wall_clock_seconds).dump(2) << '\n';
  }
  return paths;
}

}  // namespace matbandit
