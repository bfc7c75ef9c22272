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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "collat/analysis.h"
#include "collat/errors.h"
#include "collat/instances.h"
#include "collat/star_solver.h"
#include "fixtures.h"

namespace collat {
namespace {

using testing::make_star;
using Players = std::vector<std::size_t>;

std::vector<Money> money(std::initializer_list<Rational> values) { return {values}; }

CollateralMatrix as_matrix(const InvestmentNetwork& net, const std::vector<Money>& c) {
  CollateralMatrix m = CollateralMatrix::zero(net);
  for (EdgeId e = 0; e < c.size(); ++e) m.set(e, c[e]);
  return m;
}

TEST(MinimalVector, TwoUnitPlayers) {
  const auto star = make_star({1, 1}, 1, 1);
  EXPECT_EQ(minimal_vector_for_order(star, Players{0, 1}), money({1, 0}));
}

TEST(MinimalVector, UnitPlayerFirst) {
  const auto star = make_star({3, 2, 1}, 3, 1);
  EXPECT_EQ(minimal_vector_for_order(star, Players{2, 0, 1}), money({ratio(3, 2), 0, 1}));
}

TEST(MinimalVector, SingleLargeInvestorIsFree) {
  EXPECT_EQ(minimal_vector_for_order(make_star({4}, 1, 1), Players{0}), money({0}));
}

TEST(MinimalVector, RejectsNonPermutations) {
  const auto star = make_star({1, 1}, 1, 1);
  EXPECT_THROW(minimal_vector_for_order(star, Players{0, 0}), std::invalid_argument);
  EXPECT_THROW(minimal_vector_for_order(star, Players{0}), std::invalid_argument);
  EXPECT_THROW(minimal_vector_for_order(star, Players{0, 2}), std::invalid_argument);
}

TEST(OptimalPartial, UnitPlayerFull) {
  EXPECT_EQ(optimal_partial_for_set(make_star({3, 2, 1}, 3, 1), Players{2}),
            money({ratio(3, 2), 0, 1}));
}

TEST(OptimalPartial, UnprofitableStarStillEvaluates) {
  const auto c = optimal_partial_for_set(make_star({2, 1}, 2, 1), Players{1});
  EXPECT_EQ(c, money({ratio(2, 3), 1}));
  EXPECT_EQ(c[0] + c[1], ratio(5, 3));
}

TEST(OptimalPartial, EveryoneFull) {
  const auto star = make_star({3, 2, 1}, 3, 1);
  EXPECT_EQ(optimal_partial_for_set(star, Players{0, 1, 2}), star.investments);
}

TEST(OptimalPartial, TiesFollowInputOrder) {
  // Equal investments: the earlier player is asked first and pays more.
  const auto c = optimal_partial_for_set(make_star({2, 2, 2}, 4, 1), Players{});
  EXPECT_EQ(c, money({2, 2, ratio(2, 3)}));
}

TEST(SolveStar, ThreePlayers) {
  const StarSolution s = solve_star(make_star({3, 2, 1}, 3, 1));
  EXPECT_EQ(s.total, ratio(5, 2));
  EXPECT_EQ(s.full_set, Players{2});
  EXPECT_EQ(s.collateral, money({ratio(3, 2), 0, 1}));
  EXPECT_EQ(s.order, (Players{2, 0, 1}));
}

TEST(SolveStar, TwoUnitPlayers) {
  const StarSolution s = solve_star(make_star({1, 1}, 1, 1));
  EXPECT_EQ(s.total, 1);
  EXPECT_EQ(s.full_set, Players{0});
}

TEST(SolveStar, FreeRider) {
  EXPECT_EQ(solve_star(make_star({4}, 1, 1)).total, 0);
}

TEST(SolveStar, GuardRefusesHugeStars) {
  StarInstance star = make_star(std::vector<Money>(26, Money(1)), 1, 1);
  EXPECT_THROW(solve_star(star), TooLargeError);
}

TEST(BruteForce, AgreesOnExamples) {
  EXPECT_EQ(brute_force_star(make_star({1, 1}, 1, 1)).total, 1);
  EXPECT_EQ(brute_force_star(make_star({3, 2, 1}, 3, 1)).total, ratio(5, 2));
  EXPECT_EQ(brute_force_star(make_star({2, 1}, 2, 1)).total, ratio(5, 3));
}

TEST(BruteForce, Guard) {
  EXPECT_THROW(brute_force_star(make_star(std::vector<Money>(10, Money(1)), 1, 1)), TooLargeError);
}

TEST(StarNetwork, Layout) {
  const auto net = star_network(make_star({3, 2}, 1, 2));
  EXPECT_EQ(net.num_vertices(), 3u);
  EXPECT_EQ(net.name(0), "E");
  EXPECT_EQ(net.name(2), "p2");
  EXPECT_EQ(net.amount(1), 2);
  EXPECT_EQ(net.rate(0), 2);
}

// Random rational stars: amounts multiples of 1/2, cost and rate rational.
StarInstance rational_star(std::mt19937_64& rng) {
  StarInstance star;
  const std::size_t d = 1 + rng() % 7;
  for (std::size_t i = 0; i < d; ++i) {
    star.investments.push_back(ratio(1 + rng() % 12, 2));
  }
  const Money x = star.total();
  star.cost = x * ratio(rng() % 4, 4);
  star.rate = star.cost / (x - star.cost) + ratio(rng() % 6, 3);
  if (star.rate <= 0) star.rate = ratio(1, 3);
  return star;
}

TEST(StarProperty, SubsetSearchMatchesPermutations) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const StarInstance star = rational_star(rng);
    EXPECT_EQ(solve_star(star).total, brute_force_star(star).total) << "trial " << trial;
  }
}

TEST(StarProperty, OutputIsViableMinimalAndConsistent) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const StarInstance star = rational_star(rng);
    const StarSolution s = solve_star(star);
    const auto net = star_network(star);
    const CollateralMatrix c = as_matrix(net, s.collateral);
    ASSERT_TRUE(is_viable(net, c));
    EXPECT_TRUE(is_minimal(net, c));
    EXPECT_EQ(minimal_vector_for_order(star, s.order), s.collateral);
    Money total = 0;
    for (std::size_t i = 0; i < star.size(); ++i) {
      EXPECT_GE(s.collateral[i], 0);
      EXPECT_LE(s.collateral[i], star.investments[i]);
      total += s.collateral[i];
    }
    EXPECT_EQ(total, s.total);
    for (std::size_t i : s.full_set) EXPECT_EQ(s.collateral[i], star.investments[i]);
  }
}

TEST(StarProperty, EpsilonReductionBreaksViability) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 60; ++trial) {
    const StarInstance star = rational_star(rng);
    const StarSolution s = solve_star(star);
    const auto net = star_network(star);
    std::optional<Money> smallest;
    for (const Money& v : s.collateral) {
      if (v > 0 && (!smallest || v < *smallest)) smallest = v;
    }
    if (!smallest) continue;
    const Money eps = *smallest / 2;
    for (std::size_t i = 0; i < star.size(); ++i) {
      if (s.collateral[i] == 0) continue;
      std::vector<Money> lowered = s.collateral;
      lowered[i] -= eps;
      EXPECT_FALSE(is_viable(net, as_matrix(net, lowered)));
    }
  }
}

TEST(StarProperty, PartialCollateralsMonotone) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const StarInstance star = rational_star(rng);
    const StarSolution s = solve_star(star);
    for (std::size_t a = 0; a < star.size(); ++a) {
      for (std::size_t b = 0; b < star.size(); ++b) {
        const Money& ca = s.collateral[a];
        const Money& cb = s.collateral[b];
        const bool partial_a = ca > 0 && ca < star.investments[a];
        const bool partial_b = cb > 0 && cb < star.investments[b];
        if (!partial_a || !partial_b || star.investments[a] <= star.investments[b]) continue;
        EXPECT_GT(ca, cb);
        EXPECT_GT(ca / star.investments[a], cb / star.investments[b]);
      }
    }
  }
}

TEST(StarProperty, OneInForFree) {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 150; ++trial) {
    const StarInstance star = rational_star(rng);
    const StarSolution s = solve_star(star);
    bool free_seen = false;
    for (std::size_t i : s.order) {
      if (free_seen) EXPECT_EQ(s.collateral[i], 0);
      if (s.collateral[i] == 0) free_seen = true;
    }
  }
}

TEST(StarProperty, LargeAlphaIsAllOrNothing) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    RandomStarProfile profile;
    profile.seed = seed;
    profile.large_alpha = true;
    profile.max_players = 8;
    const StarInstance star = random_star(profile);
    const StarSolution s = solve_star(star);
    const Money largest = *std::max_element(star.investments.begin(), star.investments.end());
    bool largest_free = false;
    for (std::size_t i = 0; i < star.size(); ++i) {
      EXPECT_TRUE(s.collateral[i] == 0 || s.collateral[i] == star.investments[i]);
      largest_free = largest_free || (star.investments[i] == largest && s.collateral[i] == 0);
    }
    EXPECT_TRUE(largest_free) << "seed " << seed;
  }
}

TEST(StarProperty, ParallelSearchIsDeterministic) {
  RandomStarProfile profile;
  profile.min_players = 14;
  profile.max_players = 14;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    profile.seed = seed;
    const StarInstance star = random_star(profile);
    const StarSolution one = solve_star(star, 1);
    const StarSolution four = solve_star(star, 4);
    EXPECT_EQ(one.total, four.total);
    EXPECT_EQ(one.full_set, four.full_set);
    EXPECT_EQ(one.collateral, four.collateral);
  }
}

}  // namespace
}  // namespace collat
