// Copyright 2026 The Collat Authors.
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

// Instance generators: the three-enterprise cycle family, the feedback vertex
// set gadget, the knapsack star, and seeded random networks and stars.

#ifndef COLLAT_INSTANCES_H_
#define COLLAT_INSTANCES_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "collat/network.h"
#include "collat/rational.h"
#include "collat/star_solver.h"

namespace collat {

// Enterprises A, B, C on a unit-weight cycle A->B->C->A, each with two spike
// investors of weights 1 and k; Z = k + 1 and alpha = 2k everywhere. The
// optimum is k + 5 while each star alone needs 2. Requires k >= 3.
InvestmentNetwork gen_cycle_family(int k);

struct DirectedGraph {
  std::size_t num_vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
};

// Collateral instance whose optimum encodes a minimum feedback vertex set of
// g. Vertices of out-degree zero are stripped until none remain; surviving
// arcs become unit edges and every survivor gets spikes of weights 1 and k,
// with k = 1 + the maximum out-degree of g. Z = k + 1, alpha = 2k. A graph
// without cycles yields an empty network.
InvestmentNetwork gen_fvs_gadget(const DirectedGraph& g);

// Star whose optimal full-collateral set solves inverse knapsack on (xs, t):
// players xs plus one of size max(xs) + 1, Z = that size + t, alpha = 2Z.
// Requires positive xs and 0 <= t <= sum(xs) - max(xs).
StarInstance gen_knapsack_star(std::span<const std::int64_t> xs, std::int64_t t);

// Indices of a minimum-sum subset of xs with sum strictly above t, found by
// enumeration; nullopt if sum(xs) <= t. Ties go to the smallest mask.
// Requires |xs| <= 20.
std::optional<std::vector<std::size_t>> inverse_knapsack_brute(std::span<const std::int64_t> xs,
                                                               std::int64_t t);

struct RandomProfile {
  std::size_t num_vertices = 8;
  std::size_t max_out_degree = 3;
  bool acyclic = false;
  // Integer inputs with alpha_k > Z_k at every enterprise.
  bool large_alpha = false;
  std::int64_t weight_min = 1;
  std::int64_t weight_max = 5;
  std::uint64_t seed = 1;
};

// Seeded and reproducible across platforms. Every enterprise is profitable,
// so the result always passes validate_network.
InvestmentNetwork random_network(const RandomProfile& profile);

struct RandomStarProfile {
  std::size_t min_players = 1;
  std::size_t max_players = 6;
  bool large_alpha = false;
  std::int64_t weight_min = 1;
  std::int64_t weight_max = 9;
  std::uint64_t seed = 1;
};

// Profitable random star.
StarInstance random_star(const RandomStarProfile& profile);

}  // namespace collat

#endif  // COLLAT_INSTANCES_H_
