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

#include "matbandit/instances.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "matbandit/errors.hpp"

namespace matbandit {

LowerBoundInstance generate_lower_bound_instance(int ground_set_size,
                                                 int rank, double delta) {
  if (rank < 1 || ground_set_size < rank) {
    throw InputError("lower bound instance: need 1 <= K <= L");
  }
  if (!(delta > 0.0 && delta < 0.5)) {
    throw InputError("lower bound instance: delta must lie in (0, 0.5)");
  }
  // Contiguous blocks; the first L mod K blocks take the extra item.
  std::vector<int> block_of(ground_set_size);
  std::vector<double> means(ground_set_size);
  const int base = ground_set_size / rank;
  const int extra = ground_set_size % rank;
  int item = 0;
  for (int b = 0; b < rank; ++b) {
    const int size = base + (b < extra ? 1 : 0);
    for (int j = 0; j < size; ++j, ++item) {
      block_of[item] = b;
      means[item] = j == 0 ? 0.5 : 0.5 - delta;
    }
  }
  Matroid matroid =
      Matroid::partition(std::move(block_of), std::vector<int>(rank, 1));
  WeightEnvironment env = WeightEnvironment::bernoulli(std::move(means));
  const double slope =
      static_cast<double>(ground_set_size - rank) / (4.0 * delta);
  return LowerBoundInstance{std::move(matroid), std::move(env), slope};
}

Matroid random_connected_graphic(int vertex_count, int edge_count, Rng& rng) {
  if (vertex_count < 2 || edge_count < vertex_count - 1) {
    throw InputError("random graphic: need V >= 2 and E >= V - 1");
  }
  const long long max_edges =
      static_cast<long long>(vertex_count) * (vertex_count - 1) / 2;
  if (edge_count > max_edges) {
    throw InputError("random graphic: too many edges for a simple graph");
  }
  // Random spanning tree first, then distinct extra edges.
  std::vector<int> perm(vertex_count);
  for (int i = 0; i < vertex_count; ++i) perm[i] = i;
  for (int i = vertex_count - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.uniform_int(i + 1)]);
  }
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < vertex_count; ++i) {
    const int u = perm[i];
    const int v = perm[rng.uniform_int(i)];
    edges.emplace_back(u, v);
    seen.emplace(std::min(u, v), std::max(u, v));
  }
  while (static_cast<int>(edges.size()) < edge_count) {
    const int u = rng.uniform_int(vertex_count);
    const int v = rng.uniform_int(vertex_count);
    if (u == v) continue;
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) continue;
    edges.emplace_back(u, v);
  }
  return Matroid::graphic(vertex_count, std::move(edges));
}

Matroid random_matroid(FamilyKind kind, int ground_set_size, Rng& rng) {
  if (ground_set_size < 2) {
    throw InputError("random_matroid: need at least 2 items");
  }
  const int n = ground_set_size;
  switch (kind) {
    case FamilyKind::uniform:
      return Matroid::uniform(n, 1 + rng.uniform_int(n));
    case FamilyKind::partition: {
      const int blocks = 1 + rng.uniform_int(std::max(1, n / 2));
      std::vector<int> block_of(n);
      for (int e = 0; e < n; ++e) block_of[e] = rng.uniform_int(blocks);
      std::vector<int> caps(blocks);
      for (int b = 0; b < blocks; ++b) caps[b] = 1 + rng.uniform_int(2);
      return Matroid::partition(std::move(block_of), std::move(caps));
    }
    case FamilyKind::graphic: {
      // Vertex count below the item count keeps cycles likely.
      const int vertices = 2 + rng.uniform_int(std::max(1, n - 1));
      std::vector<std::pair<int, int>> edges(n);
      for (auto& [u, v] : edges) {
        u = rng.uniform_int(vertices);
        v = rng.uniform_int(vertices);
      }
      return Matroid::graphic(vertices, std::move(edges));
    }
    case FamilyKind::transversal: {
      const int right = 1 + rng.uniform_int(n);
      std::vector<std::vector<int>> adjacency(n);
      for (auto& adj : adjacency) {
        const int degree = rng.uniform_int(std::min(right, 4) + 1);
        std::set<int> picked;
        while (static_cast<int>(picked.size()) < degree) {
          picked.insert(rng.uniform_int(right));
        }
        adj.assign(picked.begin(), picked.end());
      }
      return Matroid::transversal(right, std::move(adjacency));
    }
    case FamilyKind::linear: {
      const int dim = 2 + rng.uniform_int(std::max(1, n / 2));
      std::vector<std::vector<long long>> columns(n);
      for (auto& col : columns) {
        col.resize(dim);
        for (auto& x : col) x = rng.uniform_int(4) - 1;  // in {-1,0,1,2}
      }
      return Matroid::linear(dim, std::move(columns));
    }
  }
  throw InputError("random_matroid: unknown family");
}

WeightEnvironment random_bernoulli_environment(int ground_set_size, Rng& rng,
                                               double low, double high) {
  std::vector<double> means(ground_set_size);
  for (double& p : means) p = low + (high - low) * rng.uniform01();
  return WeightEnvironment::bernoulli(std::move(means));
}

ItemSet random_basis(const Matroid& m, Rng& rng) {
  std::vector<int> order(m.ground_set_size());
  for (int i = 0; i < m.ground_set_size(); ++i) order[i] = i;
  for (int i = m.ground_set_size() - 1; i > 0; --i) {
    std::swap(order[i], order[rng.uniform_int(i + 1)]);
  }
  ExtensionOracle oracle(m);
  for (int e : order) {
    if (oracle.can_add(e)) oracle.add(e);
  }
  return oracle.items();
}

}  // namespace matbandit
