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

#ifndef MATBANDIT_LOADERS_HPP_
#define MATBANDIT_LOADERS_HPP_

#include <optional>
#include <string>

#include "matbandit/environment.hpp"
#include "matbandit/matroid.hpp"

namespace matbandit {

// Text instance formats. '#' starts a comment everywhere.
//
//   edge_list_graph: "u v mean_latency" per line. Yields a graphic matroid
//     plus the latency environment over those means.
//   bipartite_graph: "left right" edge lines, then a line "means", then
//     "left value" lines. Yields a transversal matroid plus a Bernoulli
//     environment over the per-left-vertex values.
//   feature_matrix: header "L d", then L rows of d integers. Yields a
//     linear matroid only.
//   reward_rows: header "N L", then N rows of L reals in [0,1]. Yields an
//     empirical-rows environment only.
enum class InstanceFormat {
  edge_list_graph,
  bipartite_graph,
  feature_matrix,
  reward_rows,
};

InstanceFormat parse_instance_format(const std::string& name);
std::string format_name(InstanceFormat format);

struct LoadedInstance {
  std::optional<Matroid> matroid;
  std::optional<WeightEnvironment> environment;
};

// Parses the file; errors carry the offending line number.
LoadedInstance load_instance(const std::string& path, InstanceFormat format);

}  // namespace matbandit

#endif  // MATBANDIT_LOADERS_HPP_
