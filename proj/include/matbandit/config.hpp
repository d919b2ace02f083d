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

#ifndef MATBANDIT_CONFIG_HPP_
#define MATBANDIT_CONFIG_HPP_

#include <string>

#include "json.hpp"
#include "matbandit/simulate.hpp"

namespace matbandit {

inline constexpr const char* kVersion = "0.1.0";

// JSON run-config grammar (see README for the full description):
//   matroid:      inline family spec, or {"family":"file","path","format"}
//   environment:  inline kind spec, {"kind":"file",...}, or
//                 {"kind":"from_instance"} to reuse the one the matroid
//                 file provides; may be omitted in that case
//   policy:       {"name":"omm"} | {"name":"epsilon_greedy","epsilon":x}
//                 | {"name":"optimal"}
//   horizon, seed, replications, output
RunConfig parse_run_config(const nlohmann::json& j);
RunConfig load_run_config(const std::string& path);

// Canonical resolved echo: file references are replaced by the loaded
// inline data, so the echo alone reproduces the run.
nlohmann::json config_to_json(const RunConfig& cfg);

nlohmann::json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const nlohmann::json& j);
nlohmann::json environment_to_json(const WeightEnvironment& env);
WeightEnvironment environment_from_json(const nlohmann::json& j);

nlohmann::json build_manifest(const RunConfig& cfg, const RunResult& result,
                              double wall_clock_seconds);

struct RunOutputPaths {
  std::string csv;
  std::string manifest;
};

// Resolves the output prefix (honoring the MATBANDIT_OUTPUT_DIR override),
// writes <prefix>.csv and <prefix>.manifest.json.
RunOutputPaths write_run_outputs(const RunConfig& cfg, const RunResult& result,
                                 double wall_clock_seconds);

}  // namespace matbandit

#endif  // MATBANDIT_CONFIG_HPP_
