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

#include "matbandit/loaders.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <vector>

#include "matbandit/errors.hpp"

namespace matbandit {
namespace {

struct Line {
  int number = 0;
  std::string text;
};

// Non-empty lines with comments stripped, keeping original line numbers.
std::vector<Line> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file: " + path);
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const bool blank =
        std::all_of(raw.begin(), raw.end(),
                    [](unsigned char c) { return std::isspace(c); });
    if (!blank) lines.push_back({number, raw});
  }
  return lines;
}

[[noreturn]] void parse_fail(const std::string& path, int line,
                             const std::string& message) {
  throw InputError(path + ":" + std::to_string(line) + ": " + message);
}

template <typename T>
std::vector<T> parse_fields(const std::string& path, const Line& line,
                            int expected = -1) {
  std::istringstream in(line.text);
  std::vector<T> fields;
  T value;
  while (in >> value) fields.push_back(value);
  std::string trailing;
  if (!in.eof() && in.fail()) {
    in.clear();
    in >> trailing;
    parse_fail(path, line.number, "unexpected token '" + trailing + "'");
  }
  if (expected >= 0 && static_cast<int>(fields.size()) != expected) {
    parse_fail(path, line.number,
               "expected " + std::to_string(expected) + " fields, found " +
                   std::to_string(fields.size()));
  }
  return fields;
}

LoadedInstance load_edge_list(const std::string& path) {
  const auto lines = read_lines(path);
  if (lines.empty()) throw InputError(path + ": empty edge list");
  std::vector<std::pair<int, int>> edges;
  std::vector<double> latencies;
  int max_vertex = -1;
  for (const Line& line : lines) {
    std::istringstream in(line.text);
    long long u, v;
    double latency;
    if (!(in >> u >> v >> latency)) {
      parse_fail(path, line.number, "expected 'u v mean_latency'");
    }
    if (u < 0 || v < 0) {
      parse_fail(path, line.number, "negative vertex index");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    latencies.push_back(latency);
    max_vertex = std::max({max_vertex, static_cast<int>(u),
                           static_cast<int>(v)});
  }
  LoadedInstance out;
  out.matroid = Matroid::graphic(max_vertex + 1, std::move(edges));
  out.environment =
      WeightEnvironment::clipped_shifted_exponential(std::move(latencies));
  return out;
}

LoadedInstance load_bipartite(const std::string& path) {
  const auto lines = read_lines(path);
  std::vector<std::pair<int, int>> edge_rows;
  std::vector<std::pair<int, double>> mean_rows;
  bool in_means = false;
  int means_line = -1;
  for (const Line& line : lines) {
    std::istringstream probe(line.text);
    std::string head;
    probe >> head;
    if (head == "means") {
      if (in_means) parse_fail(path, line.number, "duplicate means section");
      in_means = true;
      means_line = line.number;
      continue;
    }
    if (!in_means) {
      const auto f = parse_fields<long long>(path, line, 2);
      if (f[0] < 0 || f[1] < 0) {
        parse_fail(path, line.number, "negative vertex index");
      }
      edge_rows.emplace_back(static_cast<int>(f[0]), static_cast<int>(f[1]));
    } else {
      std::istringstream in(line.text);
      long long left;
      double value;
      if (!(in >> left >> value)) {
        parse_fail(path, line.number, "expected 'left value'");
      }
      mean_rows.emplace_back(static_cast<int>(left), value);
    }
  }
  if (edge_rows.empty()) throw InputError(path + ": no bipartite edges");
  if (!in_means) {
    throw InputError(path + ": missing 'means' section");
  }
  int left_count = 0, right_count = 0;
  for (const auto& [l, r] : edge_rows) {
    left_count = std::max(left_count, l + 1);
    right_count = std::max(right_count, r + 1);
  }
  std::vector<std::vector<int>> adjacency(left_count);
  for (const auto& [l, r] : edge_rows) adjacency[l].push_back(r);
  std::vector<double> means(left_count, 0.0);
  std::vector<char> filled(left_count, 0);
  for (const auto& [l, value] : mean_rows) {
    if (l >= left_count) {
      parse_fail(path, means_line, "mean for unknown left vertex " +
                                       std::to_string(l));
    }
    means[l] = value;
    filled[l] = 1;
  }
  for (int l = 0; l < left_count; ++l) {
    if (!filled[l]) {
      throw InputError(path + ": no mean given for left vertex " +
                       std::to_string(l));
    }
  }
  LoadedInstance out;
  out.matroid = Matroid::transversal(right_count, std::move(adjacency));
  out.environment = WeightEnvironment::bernoulli(std::move(means));
  return out;
}

LoadedInstance load_feature_matrix(const std::string& path) {
  const auto lines = read_lines(path);
  if (lines.empty()) throw InputError(path + ": empty feature matrix");
  const auto header = parse_fields<long long>(path, lines[0], 2);
  const int item_count = static_cast<int>(header[0]);
  const int dimension = static_cast<int>(header[1]);
  if (item_count < 0 || dimension < 1) {
    parse_fail(path, lines[0].number, "invalid header 'L d'");
  }
  if (static_cast<int>(lines.size()) != item_count + 1) {
    throw InputError(path + ": expected " + std::to_string(item_count) +
                     " rows, found " + std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<long long>> columns;
  columns.reserve(item_count);
  for (int i = 1; i <= item_count; ++i) {
    columns.push_back(parse_fields<long long>(path, lines[i], dimension));
  }
  LoadedInstance out;
  out.matroid = Matroid::linear(dimension, std::move(columns));
  return out;
}

LoadedInstance load_reward_rows(const std::string& path) {
  const auto lines = read_lines(path);
  if (lines.empty()) throw InputError(path + ": empty reward file");
  const auto header = parse_fields<long long>(path, lines[0], 2);
  const int row_count = static_cast<int>(header[0]);
  const int item_count = static_cast<int>(header[1]);
  if (row_count < 1 || item_count < 1) {
    parse_fail(path, lines[0].number, "invalid header 'N L'");
  }
  if (static_cast<int>(lines.size()) != row_count + 1) {
    throw InputError(path + ": expected " + std::to_string(row_count) +
                     " rows, found " + std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<double>> rows;
  rows.reserve(row_count);
  for (int i = 1; i <= row_count; ++i) {
    auto row = parse_fields<double>(path, lines[i], item_count);
    for (double x : row) {
      if (!(x >= 0.0 && x <= 1.0)) {
        parse_fail(path, lines[i].number, "reward outside [0,1]");
      }
    }
    rows.push_back(std::move(row));
  }
  LoadedInstance out;
  out.environment = WeightEnvironment::empirical_rows(std::move(rows));
  return out;
}

}  // namespace

InstanceFormat parse_instance_format(const std::string& name) {
  if (name == "edge_list_graph") return InstanceFormat::edge_list_graph;
  if (name == "bipartite_graph") return InstanceFormat::bipartite_graph;
  if (name == "feature_matrix") return InstanceFormat::feature_matrix;
  if (name == "reward_rows") return InstanceFormat::reward_rows;
  throw InputError("unknown instance format: " + name);
}

std::string format_name(InstanceFormat format) {
  switch (format) {
    case InstanceFormat::edge_list_graph: return "edge_list_graph";
    case InstanceFormat::bipartite_graph: return "bipartite_graph";
    case InstanceFormat::feature_matrix: return "feature_matrix";
    case InstanceFormat::reward_rows: return "reward_rows";
  }
  throw InputError("unknown instance format");
}

LoadedInstance load_instance(const std::string& path, InstanceFormat format) {
  switch (format) {
    case InstanceFormat::edge_list_graph: return load_edge_list(path);
    case InstanceFormat::bipartite_graph: return load_bipartite(path);
    case InstanceFormat::feature_matrix: return load_feature_matrix(path);
    case InstanceFormat::reward_rows: return load_reward_rows(path);
  }
  throw InputError("unknown instance format");
}

}  // namespace matbandit
