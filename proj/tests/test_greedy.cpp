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

#include "matbandit/greedy.hpp"

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "matbandit/errors.hpp"
#include "matbandit/instances.hpp"
#include "matbandit/rng.hpp"
#include "matbandit/verify.hpp"

using namespace matbandit;

namespace {

double naive_sum(const ItemSet& s, const WeightVector& w) {
  double total = 0.0;
  for (int e : s) total += w[e];
  return total;
}

WeightVector random_weights(int n, Rng& rng) {
  WeightVector w(n);
  for (double& x : w) x = rng.uniform01();
  return w;
}

}  // namespace

TEST_CASE("evaluate_modular") {
  const WeightVector w{0.5, 0.9, 0.25};
  CHECK(evaluate_modular({}, w) == 0.0);
  CHECK(evaluate_modular({0, 2}, w) == doctest::Approx(0.75).epsilon(1e-15));
  CHECK_THROWS_AS(evaluate_modular({3}, w), InputError);
  CHECK_THROWS_AS(evaluate_modular({1, 1}, w), InputError);

  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Matroid m = random_matroid(FamilyKind::graphic, 9, rng);
    const WeightVector weights = random_weights(9, rng);
    const ItemSet s = random_basis(m, rng);
    CHECK(evaluate_modular(s, weights) ==
          doctest::Approx(naive_sum(s, weights)).epsilon(1e-12));
  }
}

TEST_CASE("greedy picks the top-k of a uniform matroid") {
  const Matroid m = Matroid::uniform(3, 2);
  CHECK(greedy_max_basis(m, {0.9, 0.5, 0.1}) == ItemSet{0, 1});
}

TEST_CASE("greedy on the partition bandit instance selects block minima") {
  const auto instance = generate_lower_bound_instance(20, 4, 0.1);
  const ItemSet basis = greedy_max_basis(
      instance.matroid, instance.environment.mean_vector());
  CHECK(basis == ItemSet{0, 5, 10, 15});
}

TEST_CASE("greedy output is ordered by weight, ties by index") {
  const Matroid m = Matroid::uniform(5, 3);
  CHECK(greedy_max_basis(m, {0.3, 0.7, 0.3, 0.9, 0.3}) == ItemSet{3, 1, 0});
}

TEST_CASE("greedy rejects non-finite weights") {
  const Matroid m = Matroid::uniform(2, 1);
  CHECK_THROWS_AS(greedy_max_basis(m, {0.1, std::nan("")}), InputError);
}

TEST_CASE("adding a constant to the weights keeps the greedy basis") {
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const Matroid m = random_matroid(FamilyKind::transversal, 8, rng);
    WeightVector w = random_weights(8, rng);
    const ItemSet base = greedy_max_basis(m, w);
    for (double& x : w) x += 3.25;
    CHECK(greedy_max_basis(m, w) == base);
  }
}

TEST_CASE("brute force on small instances") {
  const Matroid uniform = Matroid::uniform(3, 2);
  const auto top = brute_force_max_basis(uniform, {0.9, 0.5, 0.1});
  CHECK(top.basis == ItemSet{0, 1});
  CHECK(top.weight == doctest::Approx(1.4).epsilon(1e-15));

  // 4-cycle: every spanning tree drops one edge; dropping the lightest
  // (weight 1) leaves 4 + 3 + 2 = 9.
  const Matroid cycle =
      Matroid::graphic(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto tree = brute_force_max_basis(cycle, {4, 3, 2, 1});
  CHECK(tree.weight == doctest::Approx(9.0).epsilon(1e-15));
  CHECK(tree.basis == ItemSet{0, 1, 2});

  const Matroid big = Matroid::uniform(21, 2);
  CHECK_THROWS_AS(brute_force_max_basis(big, WeightVector(21, 0.5)),
                  InputError);
}

TEST_CASE("greedy weight equals the brute-force maximum") {
  Rng rng(1234);
  for (const auto kind :
       {FamilyKind::uniform, FamilyKind::partition, FamilyKind::graphic,
        FamilyKind::transversal, FamilyKind::linear}) {
    const Matroid m = random_matroid(kind, 10, rng);
    const CheckResult result = check_greedy_matches_brute_force(m, 40, rng);
    INFO(m.family_name(), ": ", result.detail);
    CHECK(result.passed);
  }
}

TEST_CASE("identity bijection when both bases coincide") {
  const Matroid m = Matroid::uniform(6, 3);
  const ItemSet basis{2, 4, 5};
  const auto bij = construct_exchange_bijection(m, basis, basis);
  CHECK(bij.pi == std::vector<int>{0, 1, 2});
}

TEST_CASE("shared items are fixed points of the bijection") {
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const Matroid m = random_matroid(FamilyKind::graphic, 10, rng);
    const ItemSet reference = random_basis(m, rng);
    const ItemSet chosen = random_basis(m, rng);
    const auto bij = construct_exchange_bijection(m, reference, chosen);
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      const auto it = std::find(reference.begin(), reference.end(), chosen[k]);
      if (it != reference.end()) {
        CHECK(bij.pi[k] == static_cast<int>(it - reference.begin()));
      }
    }
  }
}

TEST_CASE("bijection invariants hold on random base pairs") {
  Rng rng(31);
  for (const auto kind :
       {FamilyKind::uniform, FamilyKind::partition, FamilyKind::graphic,
        FamilyKind::transversal, FamilyKind::linear}) {
    const Matroid m = random_matroid(kind, 11, rng);
    const CheckResult result = check_bijection_invariants(m, 100, rng);
    INFO(m.family_name(), ": ", result.detail);
    CHECK(result.passed);
  }
}

TEST_CASE("paired gap sums telescope to the value difference") {
  Rng rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    const Matroid m = random_matroid(FamilyKind::partition, 10, rng);
    const WeightVector w_bar = random_weights(10, rng);
    const ItemSet reference = random_basis(m, rng);
    const ItemSet chosen = random_basis(m, rng);
    const auto bij = construct_exchange_bijection(m, reference, chosen);
    double paired = 0.0;
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      paired += w_bar[reference[bij.pi[k]]] - w_bar[chosen[k]];
    }
    const double difference = evaluate_modular(reference, w_bar) -
                              evaluate_modular(chosen, w_bar);
    CHECK(paired == doctest::Approx(difference).epsilon(1e-12));
  }
}

TEST_CASE("bijection rejects non-bases") {
  const Matroid m = Matroid::uniform(4, 2);
  CHECK_THROWS_AS(construct_exchange_bijection(m, {0}, {1, 2}),
                  ContractViolation);
  CHECK_THROWS_AS(construct_exchange_bijection(m, {0, 1}, {2}),
                  ContractViolation);
}
