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

#include "matbandit/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "matbandit/errors.hpp"

namespace matbandit {
namespace {

void check_items(const Matroid& m, const ItemSet& s, const char* where) {
  std::vector<char> seen(m.ground_set_size(), 0);
  for (int e : s) {
    if (e < 0 || e >= m.ground_set_size()) {
      throw InputError(std::string(where) + ": item index " +
                       std::to_string(e) + " outside ground set of size " +
                       std::to_string(m.ground_set_size()));
    }
    if (seen[e]) {
      throw InputError(std::string(where) + ": duplicate item " +
                       std::to_string(e));
    }
    seen[e] = 1;
  }
}

// Kuhn augmenting-path step; match[r] holds a position into s.
bool kuhn_augment(const TransversalFamily& f, const ItemSet& s, int pos,
                  std::vector<char>& visited, std::vector<int>& match) {
  for (int r : f.adjacency[s[pos]]) {
    if (visited[r]) continue;
    visited[r] = 1;
    if (match[r] < 0 || kuhn_augment(f, s, match[r], visited, match)) {
      match[r] = pos;
      return true;
    }
  }
  return false;
}

bool transversal_independent(const TransversalFamily& f, const ItemSet& s) {
  std::vector<int> match(f.right_count, -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::vector<char> visited(f.right_count, 0);
    if (!kuhn_augment(f, s, static_cast<int>(i), visited, match)) return false;
  }
  return true;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  // Returns false if u and v were already connected (a cycle would form).
  bool unite(int u, int v) {
    int ru = find(u), rv = find(v);
    if (ru == rv) return false;
    parent[ru] = rv;
    return true;
  }
};

std::vector<BigInt> to_bigint(const std::vector<long long>& v) {
  std::vector<BigInt> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

void normalize_content(std::vector<BigInt>& v) {
  BigInt g = 0;
  for (const BigInt& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1) {
    for (BigInt& x : v) x /= g;
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Construction

Matroid::Matroid(int ground_set_size, MatroidFamily family)
    : ground_set_size_(ground_set_size), family_(std::move(family)) {
  ExtensionOracle oracle(*this);
  for (int e = 0; e < ground_set_size_; ++e) {
    if (oracle.can_add(e)) oracle.add(e);
  }
  rank_ = oracle.size();
}

Matroid Matroid::uniform(int ground_set_size, int k) {
  if (ground_set_size < 0) throw InputError("uniform: negative ground set");
  if (k < 0) throw InputError("uniform: negative cardinality cap");
  return Matroid(ground_set_size, UniformFamily{k});
}

Matroid Matroid::partition(std::vector<int> block_of,
                           std::vector<int> capacity_of) {
  const int blocks = static_cast<int>(capacity_of.size());
  for (int b : block_of) {
    if (b < 0 || b >= blocks) {
      throw InputError("partition: block index " + std::to_string(b) +
                       " outside [0, " + std::to_string(blocks) + ")");
    }
  }
  for (int c : capacity_of) {
    if (c < 0) throw InputError("partition: negative block capacity");
  }
  const int n = static_cast<int>(block_of.size());
  return Matroid(n, PartitionFamily{std::move(block_of), std::move(capacity_of)});
}

Matroid Matroid::graphic(int vertex_count,
                         std::vector<std::pair<int, int>> edges) {
  if (vertex_count < 0) throw InputError("graphic: negative vertex count");
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count) {
      throw InputError("graphic: edge endpoint outside [0, " +
                       std::to_string(vertex_count) + ")");
    }
  }
  const int n = static_cast<int>(edges.size());
  return Matroid(n, GraphicFamily{vertex_count, std::move(edges)});
}

Matroid Matroid::transversal(int right_count,
                             std::vector<std::vector<int>> adjacency) {
  if (right_count < 0) throw InputError("transversal: negative right count");
  for (const auto& adj : adjacency) {
    for (int r : adj) {
      if (r < 0 || r >= right_count) {
        throw InputError("transversal: right vertex " + std::to_string(r) +
                         " outside [0, " + std::to_string(right_count) + ")");
      }
    }
  }
  const int n = static_cast<int>(adjacency.size());
  return Matroid(n, TransversalFamily{right_count, std::move(adjacency)});
}

Matroid Matroid::linear(int dimension,
                        std::vector<std::vector<long long>> columns) {
  if (dimension < 0) throw InputError("linear: negative dimension");
  for (const auto& c : columns) {
    if (static_cast<int>(c.size()) != dimension) {
      throw InputError("linear: column of length " +
                       std::to_string(c.size()) + ", expected " +
                       std::to_string(dimension));
    }
  }
  const int n = static_cast<int>(columns.size());
  return Matroid(n, LinearFamily{dimension, std::move(columns)});
}

std::string_view Matroid::family_name() const {
  switch (family_.index()) {
    case 0: return "uniform";
    case 1: return "partition";
    case 2: return "graphic";
    case 3: return "transversal";
    default: return "linear";
  }
}

// ---------------------------------------------------------------------------
// From-scratch independence

bool is_independent(const Matroid& m, const ItemSet& s) {
  check_items(m, s, "is_independent");
  return std::visit(
      [&](const auto& f) -> bool {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, UniformFamily>) {
          return static_cast<int>(s.size()) <= f.k;
        } else if constexpr (std::is_same_v<F, PartitionFamily>) {
          std::vector<int> used(f.capacity_of.size(), 0);
          for (int e : s) {
            if (++used[f.block_of[e]] > f.capacity_of[f.block_of[e]]) {
              return false;
            }
          }
          return true;
        } else if constexpr (std::is_same_v<F, GraphicFamily>) {
          Dsu dsu(f.vertex_count);
          for (int e : s) {
            if (!dsu.unite(f.edges[e].first, f.edges[e].second)) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<F, TransversalFamily>) {
          return transversal_independent(f, s);
        } else {
          std::vector<std::vector<long long>> cols;
          cols.reserve(s.size());
          for (int e : s) cols.push_back(f.columns[e]);
          return detail::integer_matrix_rank(cols, f.dimension) ==
                 static_cast<int>(s.size());
        }
      },
      m.family());
}

bool can_extend(const Matroid& m, const ItemSet& s, int item) {
  check_items(m, s, "can_extend");
  if (item < 0 || item >= m.ground_set_size()) {
    throw InputError("can_extend: item index out of range");
  }
  if (std::find(s.begin(), s.end(), item) != s.end()) {
    throw ContractViolation("can_extend: item already in the set");
  }
  ExtensionOracle oracle(m);
  for (int e : s) {
    if (!oracle.can_add(e)) {
      throw ContractViolation("can_extend: the given set is dependent");
    }
    oracle.add(e);
  }
  return oracle.can_add(item);
}

// ---------------------------------------------------------------------------
// Incremental oracle

int ExtensionOracle::GraphicState::find(int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

bool ExtensionOracle::TransversalState::augment(int item,
                                                std::vector<char>& visited,
                                                std::vector<int>& match) const {
  for (int r : family->adjacency[item]) {
    if (visited[r]) continue;
    visited[r] = 1;
    if (match[r] < 0 || augment(match[r], visited, match)) {
      match[r] = item;
      return true;
    }
  }
  return false;
}

std::vector<BigInt> ExtensionOracle::LinearState::reduce(
    const std::vector<long long>& column) const {
  std::vector<BigInt> v = to_bigint(column);
  for (std::size_t i = 0; i < eliminated.size(); ++i) {
    const int p = pivot_of[i];
    if (v[p] == 0) continue;
    const std::vector<BigInt>& u = eliminated[i];
    const BigInt vp = v[p];
    for (std::size_t j = 0; j < v.size(); ++j) {
      v[j] = v[j] * u[p] - u[j] * vp;
    }
    normalize_content(v);
  }
  bool zero = std::all_of(v.begin(), v.end(),
                          [](const BigInt& x) { return x == 0; });
  if (zero) v.clear();
  return v;
}

ExtensionOracle::ExtensionOracle(const Matroid& m) : matroid_(&m) {
  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, UniformFamily>) {
          state_ = UniformState{f.k, 0};
        } else if constexpr (std::is_same_v<F, PartitionFamily>) {
          state_ = PartitionState{
              &f, std::vector<int>(f.capacity_of.size(), 0)};
        } else if constexpr (std::is_same_v<F, GraphicFamily>) {
          GraphicState st{&f, std::vector<int>(f.vertex_count)};
          std::iota(st.parent.begin(), st.parent.end(), 0);
          state_ = std::move(st);
        } else if constexpr (std::is_same_v<F, TransversalFamily>) {
          state_ = TransversalState{&f,
                                    std::vector<int>(f.right_count, -1)};
        } else {
          state_ = LinearState{&f, {}, {}};
        }
      },
      m.family());
}

bool ExtensionOracle::can_add(int item) {
  if (item < 0 || item >= matroid_->ground_set_size()) {
    throw InputError("can_add: item index out of range");
  }
  return std::visit(
      [&](auto& st) -> bool {
        using S = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<S, UniformState>) {
          return st.size < st.capacity;
        } else if constexpr (std::is_same_v<S, PartitionState>) {
          const int b = st.family->block_of[item];
          return st.used[b] < st.family->capacity_of[b];
        } else if constexpr (std::is_same_v<S, GraphicState>) {
          const auto& [u, v] = st.family->edges[item];
          return st.find(u) != st.find(v);
        } else if constexpr (std::is_same_v<S, TransversalState>) {
          std::vector<int> match = st.match_of_right;
          std::vector<char> visited(st.family->right_count, 0);
          return st.augment(item, visited, match);
        } else {
          return !st.reduce(st.family->columns[item]).empty();
        }
      },
      state_);
}

void ExtensionOracle::add(int item) {
  bool ok = std::visit(
      [&](auto& st) -> bool {
        using S = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<S, UniformState>) {
          if (st.size >= st.capacity) return false;
          ++st.size;
          return true;
        } else if constexpr (std::is_same_v<S, PartitionState>) {
          const int b = st.family->block_of[item];
          if (st.used[b] >= st.family->capacity_of[b]) return false;
          ++st.used[b];
          return true;
        } else if constexpr (std::is_same_v<S, GraphicState>) {
          const auto& [u, v] = st.family->edges[item];
          int ru = st.find(u), rv = st.find(v);
          if (ru == rv) return false;
          st.parent[ru] = rv;
          return true;
        } else if constexpr (std::is_same_v<S, TransversalState>) {
          std::vector<char> visited(st.family->right_count, 0);
          return st.augment(item, visited, st.match_of_right);
        } else {
          std::vector<BigInt> reduced =
              st.reduce(st.family->columns[item]);
          if (reduced.empty()) return false;
          int pivot = 0;
          while (reduced[pivot] == 0) ++pivot;
          st.eliminated.push_back(std::move(reduced));
          st.pivot_of.push_back(pivot);
          return true;
        }
      },
      state_);
  if (!ok) {
    throw ContractViolation("ExtensionOracle::add: item " +
                            std::to_string(item) +
                            " would make the set dependent");
  }
  items_.push_back(item);
}

// ---------------------------------------------------------------------------

namespace detail {

int integer_matrix_rank(const std::vector<std::vector<long long>>& columns,
                        int dimension) {
  const int ncols = static_cast<int>(columns.size());
  // Row-major d x n matrix; Bareiss fraction-free elimination.
  std::vector<std::vector<BigInt>> mat(dimension,
                                       std::vector<BigInt>(ncols));
  for (int c = 0; c < ncols; ++c) {
    for (int r = 0; r < dimension; ++r) mat[r][c] = columns[c][r];
  }
  BigInt prev = 1;
  int row = 0;
  for (int col = 0; col < ncols && row < dimension; ++col) {
    int pivot = -1;
    for (int r = row; r < dimension; ++r) {
      if (mat[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(mat[row], mat[pivot]);
    for (int r = row + 1; r < dimension; ++r) {
      for (int c = col + 1; c < ncols; ++c) {
        mat[r][c] = (mat[r][c] * mat[row][col] - mat[r][col] * mat[row][c]) /
                    prev;
      }
      mat[r][col] = 0;
    }
    prev = mat[row][col];
    ++row;
  }
  return row;
}

}  // namespace detail

}  // namespace matbandit
