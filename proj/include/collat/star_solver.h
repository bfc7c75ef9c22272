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

// Optimal collaterals for a single enterprise with d investors.
//
// For a fixed elimination order the cheapest viable vector gives each player
// exactly what makes investing weakly better when only the players before her
// (and herself) invest:
//
//   c_i = x_i * clamp(1 - (1 + a)(1 - Z / P_i), 0, 1),   P_i = prefix sum.
//
// Some optimum gives full collateral to a set A first and then takes the rest
// in non-increasing order of investment, so the search is over subsets
// (O(2^d d)) instead of permutations.

#ifndef COLLAT_STAR_SOLVER_H_
#define COLLAT_STAR_SOLVER_H_

#include <cstddef>
#include <span>
#include <vector>

#include "collat/network.h"
#include "collat/rational.h"

namespace collat {

inline constexpr std::size_t kMaxStarSubsetPlayers = 25;
inline constexpr std::size_t kMaxStarPermutationPlayers = 9;

struct StarInstance {
  std::vector<Money> investments;
  Money cost;
  Rational rate;

  std::size_t size() const { return investments.size(); }
  Money total() const;
  bool is_profitable() const;
};

struct StarSolution {
  std::vector<Money> collateral;     // by player index
  Money total;
  std::vector<std::size_t> order;    // elimination order over players
  std::vector<std::size_t> full_set; // players with c_i = x_i, ascending
};

// Throws std::invalid_argument if `order` is not a permutation of [0, d).
std::vector<Money> minimal_vector_for_order(const StarInstance& star,
                                            std::span<const std::size_t> order);

// Full collateral to `full_set`; everyone else, in non-increasing investment
// order (ties by index), gets the minimal amount given who precedes them.
std::vector<Money> optimal_partial_for_set(const StarInstance& star,
                                           std::span<const std::size_t> full_set);

// Minimum over all 2^d full sets. Equal totals resolve to the
// lexicographically smallest full set. Throws TooLargeError above
// kMaxStarSubsetPlayers.
StarSolution solve_star(const StarInstance& star, unsigned jobs = 1);

// Minimum over all d! orders; test oracle. Throws TooLargeError above
// kMaxStarPermutationPlayers.
StarSolution brute_force_star(const StarInstance& star);

// Star as a network: vertex 0 is the enterprise, vertex i + 1 is player i and
// edge i is player i's opportunity.
InvestmentNetwork star_network(const StarInstance& star);

}  // namespace collat

#endif  // COLLAT_STAR_SOLVER_H_
