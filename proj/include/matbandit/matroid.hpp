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

#ifndef MATBANDIT_MATROID_HPP_
#define MATBANDIT_MATROID_HPP_

#include <cstdint>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace matbandit {

using BigInt = boost::multiprecision::cpp_int;

// Ordered list of distinct item indices in [0, L).
using ItemSet = std::vector<int>;

// One real weight per ground-set item.
using WeightVector = std::vector<double>;

// |S| <= k.
struct UniformFamily {
  int k = 0;
};

// At most capacity_of[b] items from each block b.
struct PartitionFamily {
  std::vector<int> block_of;      // item -> block index
  std::vector<int> capacity_of;   // block -> capacity (>= 0)
};

// Items are edges of an (undirected) multigraph; independent = forest.
// Self-loops are permitted in the edge list and are never independent.
struct GraphicFamily {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // item -> (u, v)
};

// Items are left vertices of a bipartite graph; independent = matchable.
struct TransversalFamily {
  int right_count = 0;
  std::vector<std::vector<int>> adjacency;  // item -> right-vertex indices
};

// Items are integer column vectors; independent = linearly independent over
// the rationals (exact integer arithmetic, no floating point).
struct LinearFamily {
  int dimension = 0;
  std::vector<std::vector<long long>> columns;  // item -> length-d vector
};

using MatroidFamily = std::variant<UniformFamily, PartitionFamily,
                                   GraphicFamily, TransversalFamily,
                                   LinearFamily>;

// A matroid over the ground set {0, ..., L-1}. Immutable after construction
// and safe to share across threads; all per-run oracle state lives in
// ExtensionOracle.
class Matroid {
 public:
  static Matroid uniform(int ground_set_size, int k);
  static Matroid partition(std::vector<int> block_of,
                           std::vector<int> capacity_of);
  static Matroid graphic(int vertex_count,
                         std::vector<std::pair<int, int>> edges);
  static Matroid transversal(int right_count,
                             std::vector<std::vector<int>> adjacency);
  static Matroid linear(int dimension,
                        std::vector<std::vector<long long>> columns);

  int ground_set_size() const { return ground_set_size_; }

  // Cardinality of every maximal independent set.
  int rank() const { return rank_; }

  const MatroidFamily& family() const { return family_; }
  std::string_view family_name() const;

 private:
  Matroid(int ground_set_size, MatroidFamily family);

  int ground_set_size_ = 0;
  int rank_ = 0;
  MatroidFamily family_;
};

// From-scratch independence oracle; each family uses its direct
// characterization (cardinality, block counts, cycle check, saturating
// matching, exact column rank).
bool is_independent(const Matroid& m, const ItemSet& s);

// True iff s + e is independent. s must be independent and e not in s.
// Runs on the incremental oracle below; agrees with is_independent(s + e).
bool can_extend(const Matroid& m, const ItemSet& s, int item);

// Incremental single-pass oracle used by the greedy algorithm: items can be
// added one at a time and each can_add probe costs one union-find lookup,
// one augmenting-path search, or one exact column reduction. State is
// confined to one pass; copy the oracle to branch.
class ExtensionOracle {
 public:
  explicit ExtensionOracle(const Matroid& m);

  // Whether the current set plus this item stays independent. May mutate
  // internal scratch (path compression) but never the logical set.
  bool can_add(int item);

  // Adds the item. Throws ContractViolation if can_add is false.
  void add(int item);

  const ItemSet& items() const { return items_; }
  int size() const { return static_cast<int>(items_.size()); }

 private:
  struct UniformState {
    int capacity;
    int size;
  };
  struct PartitionState {
    const PartitionFamily* family;
    std::vector<int> used;
  };
  struct GraphicState {
    const GraphicFamily* family;
    std::vector<int> parent;
    int find(int v);
  };
  struct TransversalState {
    const TransversalFamily* family;
    std::vector<int> match_of_right;  // right vertex -> item, -1 if free
    bool augment(int item, std::vector<char>& visited,
                 std::vector<int>& match) const;
  };
  struct LinearState {
    const LinearFamily* family;
    std::vector<std::vector<BigInt>> eliminated;  // echelon vectors
    std::vector<int> pivot_of;                    // pivot row per vector
    // Reduces a column against the eliminated set; empty result means the
    // column is in their span.
    std::vector<BigInt> reduce(const std::vector<long long>& column) const;
  };

  const Matroid* matroid_;
  ItemSet items_;
  std::variant<UniformState, PartitionState, GraphicState, TransversalState,
               LinearState>
      state_;
};

namespace detail {
// Exact rank of an integer matrix given as columns (fraction-free Gaussian
// elimination). Shared by the linear-matroid oracle and the loaders.
int integer_matrix_rank(const std::vector<std::vector<long long>>& columns,
                        int dimension);
}  // namespace detail

}  // namespace matbandit

#endif  // MATBANDIT_MATROID_HPP_
