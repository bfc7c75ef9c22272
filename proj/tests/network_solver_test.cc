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
#include "collat/network_solver.h"
#include "fixtures.h"
#include "oracles.h"

namespace collat {
namespace {

using testing::make_star;

void expect_consistent(const InvestmentNetwork& net, const Solution& s) {
  ASSERT_EQ(s.status, SolveStatus::kSolved);
  EXPECT_EQ(s.collateral.total(), s.total);
  EXPECT_TRUE(is_viable(net, s.collateral));
  EXPECT_EQ(s.order.size(), net.num_edges());
  EXPECT_TRUE(is_valid_elimination_order(net, s.collateral, s.order));
  Money star_sum = 0;
  for (const StarTotal& t : s.star_totals) star_sum += t.total;
  EXPECT_EQ(star_sum, s.star_sum);
  if (s.nec) EXPECT_GE(*s.nec, 1);
}

TEST(Decomposition, CycleFamilyHasThreeStars) {
  const auto net = gen_cycle_family(7);
  const auto stars = star_decomposition(net);
  ASSERT_EQ(stars.size(), 3u);
  for (const StarComponent& s : stars) {
    std::vector<Money> xs = s.star.investments;
    std::sort(xs.begin(), xs.end());
    EXPECT_EQ(xs, (std::vector<Money>{1, 1, 7}));
  }
}

TEST(Decomposition, StarIsItself) {
  const auto star = make_star({3, 2, 1}, 3, 1);
  const auto stars = star_decomposition(star_network(star));
  ASSERT_EQ(stars.size(), 1u);
  EXPECT_EQ(stars[0].star.investments, star.investments);
  EXPECT_EQ(stars[0].edges, (std::vector<EdgeId>{0, 1, 2}));
}

TEST(Decomposition, NoEnterprises) {
  InvestmentNetwork net(3);
  EXPECT_TRUE(star_decomposition(net).empty());
}

TEST(Topology, OrderAndCycles) {
  EXPECT_TRUE(is_acyclic(testing::two_level_dag()));
  EXPECT_FALSE(is_acyclic(gen_cycle_family(3)));
  const auto order = topological_order(testing::two_level_dag());
  ASSERT_TRUE(order.has_value());
  const auto pos = [&](VertexId v) { return std::find(order->begin(), order->end(), v) - order->begin(); };
  EXPECT_LT(pos(1), pos(0));  // edge Q -> P
}

TEST(Dag, TwoLevelExample) {
  const auto net = testing::two_level_dag();
  const Solution s = solve_dag(net);
  expect_consistent(net, s);
  EXPECT_EQ(s.total, ratio(8, 3));
  ASSERT_EQ(s.star_totals.size(), 2u);
  EXPECT_EQ(s.star_totals[0].total, 1);
  EXPECT_EQ(s.star_totals[1].total, ratio(5, 3));
  EXPECT_EQ(s.nec, Rational(1));
  EXPECT_EQ(solve_exact(net).total, s.total);
  EXPECT_EQ(*testing::brute_force_network(net), s.total);
}

TEST(Dag, SingleStarMatchesSolveStar) {
  const auto star = make_star({3, 2, 1}, 3, 1);
  const Solution s = solve_dag(star_network(star));
  EXPECT_EQ(s.total, solve_star(star).total);
}

TEST(Dag, DisjointStarsAdd) {
  InvestmentNetwork net;
  Money expected = 0;
  for (int i = 0; i < 3; ++i) {
    const auto star = make_star({3, 2, 1}, 3 - i, 1);
    expected += solve_star(star).total;
    const VertexId center = net.add_vertex("E" + std::to_string(i));
    net.set_cost(center, star.cost);
    net.set_rate(center, star.rate);
    for (std::size_t j = 0; j < star.size(); ++j) {
      net.add_edge(center, net.add_vertex("p" + std::to_string(i) + std::to_string(j)), star.investments[j]);
    }
  }
  EXPECT_EQ(solve_dag(net).total, expected);
}

TEST(Dag, RejectsCycles) {
  EXPECT_THROW(solve_dag(gen_cycle_family(3)), CyclicInputError);
}

TEST(ResolvedSet, StarThresholds) {
  const auto free_net = star_network(make_star({4, 1}, 1, 1));
  EXPECT_EQ(minimal_matrix_for_resolved_set(free_net, EdgeSet(2), 0), 0);
  const auto full_net = star_network(make_star({1, 3}, 2, 1));
  EXPECT_EQ(minimal_matrix_for_resolved_set(full_net, EdgeSet(2), 0), 1);
  EXPECT_THROW(minimal_matrix_for_resolved_set(full_net, EdgeSet::full(2), 0), std::invalid_argument);
}

TEST(ResolvedSet, CycleEdgeIsFreeOnceSpikesInvest) {
  const int k = 7;
  const auto net = gen_cycle_family(k);
  const VertexId a = *net.find_vertex("A");
  const VertexId b = *net.find_vertex("B");
  // B's investment in A, once A's spikes are in, and with B's own spikes in
  // so that B stays solvent.
  EdgeSet resolved(net.num_edges());
  for (EdgeId e : net.out_edges(a)) {
    if (net.edge(e).investor != b) resolved.insert(e);
  }
  for (EdgeId e : net.out_edges(b)) {
    if (net.edge(e).investor != *net.find_vertex("C")) resolved.insert(e);
  }
  EXPECT_EQ(minimal_matrix_for_resolved_set(net, resolved, *net.find_edge(a, b)), 0);
}

TEST(ResolvedSet, InvestorInDefaultIsInfeasible) {
  const auto net = testing::two_cycle(false);
  EXPECT_FALSE(minimal_matrix_for_resolved_set(net, EdgeSet(2), 0).has_value());
}

TEST(ResolvedSet, DependsOnlyOnTheSet) {
  std::mt19937_64 rng(41);
  for (const auto& net : testing::random_networks(30, 6, 3, 1200)) {
    const std::size_t m = net.num_edges();
    if (m < 2) continue;
    const EdgeSet s = testing::random_subset(m, rng);
    const EdgeId e = rng() % m;
    if (s.contains(e)) continue;
    // Same set built in two orders.
    EdgeSet forward(m), backward(m);
    auto el = s.elements();
    for (EdgeId f : el) forward.insert(f);
    std::reverse(el.begin(), el.end());
    for (EdgeId f : el) backward.insert(f);
    EXPECT_EQ(minimal_matrix_for_resolved_set(net, forward, e),
              minimal_matrix_for_resolved_set(net, backward, e));
  }
}

TEST(Exact, CycleFamily) {
  for (int k : {3, 7}) {
    const auto net = gen_cycle_family(k);
    const Solution s = solve_exact(net);
    expect_consistent(net, s);
    EXPECT_EQ(s.total, k + 5);
    EXPECT_EQ(s.star_sum, 6);
    EXPECT_EQ(s.nec, ratio(k + 5, 6));
    // One enterprise pays k + 1, the other two pay 2.
    std::vector<Money> per_enterprise;
    for (VertexId v = 0; v < 3; ++v) {
      Money sum = 0;
      for (EdgeId e : net.out_edges(v)) sum += s.collateral[e];
      per_enterprise.push_back(sum);
    }
    std::sort(per_enterprise.begin(), per_enterprise.end());
    EXPECT_EQ(per_enterprise, (std::vector<Money>{2, 2, k + 1}));
  }
}

TEST(Exact, InfeasibleTwoCycle) {
  const auto net = testing::two_cycle(false);
  const Solution s = solve_exact(net);
  EXPECT_EQ(s.status, SolveStatus::kInfeasible);
  ASSERT_TRUE(s.witness.has_value());
  EXPECT_EQ(s.witness->vertices, (std::vector<VertexId>{0, 1}));
  EXPECT_FALSE(s.nec.has_value());
}

TEST(Exact, Guard) {
  RandomProfile profile;
  profile.num_vertices = 12;
  profile.max_out_degree = 4;
  for (std::uint64_t seed = 1;; ++seed) {
    profile.seed = seed;
    const auto net = random_network(profile);
    if (net.num_edges() <= kMaxExactEdges) continue;
    EXPECT_THROW(solve_exact(net), TooLargeError);
    break;
  }
}

TEST(Exact, MatchesOrderEnumeration) {
  int compared = 0;
  for (const auto& net : testing::random_networks(80, 5, 2, 1300)) {
    if (net.num_edges() > 7) continue;
    const Solution s = solve_exact(net);
    const std::optional<Money> brute = testing::brute_force_network(net);
    if (s.status == SolveStatus::kInfeasible) {
      EXPECT_FALSE(brute.has_value());
      continue;
    }
    ASSERT_TRUE(brute.has_value());
    EXPECT_EQ(s.total, *brute);
    expect_consistent(net, s);
    ++compared;
  }
  EXPECT_GT(compared, 20);
}

TEST(Exact, MatchesDagSolver) {
  for (const auto& net : testing::random_networks(40, 8, 3, 1400, /*acyclic=*/true)) {
    if (net.num_edges() > 14) continue;
    const Solution dag = solve_dag(net);
    const Solution exact = solve_exact(net);
    EXPECT_EQ(dag.total, exact.total);
    EXPECT_EQ(dag.nec, Rational(1));
  }
}

TEST(Exact, ParallelLayersAgree) {
  for (const auto& net : testing::random_networks(10, 7, 3, 1500)) {
    if (net.num_edges() > 14) continue;
    SolverOptions options;
    options.jobs = 4;
    const Solution serial = solve_exact(net);
    const Solution parallel = solve_exact(net, options);
    EXPECT_EQ(serial.total, parallel.total);
    EXPECT_EQ(serial.collateral, parallel.collateral);
    EXPECT_EQ(serial.order, parallel.order);
  }
}

TEST(Exact, MinimalOutputs) {
  for (const auto& net : testing::random_networks(30, 6, 3, 1600)) {
    if (net.num_edges() > 12) continue;
    const Solution s = solve_exact(net);
    if (s.status != SolveStatus::kSolved) continue;
    EXPECT_TRUE(is_minimal(net, s.collateral));
  }
}

TEST(LargeAlpha, CycleFamily) {
  const auto net = gen_cycle_family(7);
  const Solution s = solve_large_alpha(net);
  expect_consistent(net, s);
  EXPECT_EQ(s.total, 12);
  EXPECT_EQ(s.total, solve_exact(net).total);
}

TEST(LargeAlpha, FvsGadgetSingleCycle) {
  DirectedGraph g;
  g.num_vertices = 3;
  g.arcs = {{0, 1}, {1, 2}, {2, 0}};
  const auto net = gen_fvs_gadget(g);
  const Solution s = solve_large_alpha(net);
  const int k = 2;
  EXPECT_EQ(s.total, k + 5);
  int paying_full = 0;
  for (VertexId v : net.enterprises()) {
    Money sum = 0;
    for (EdgeId e : net.out_edges(v)) sum += s.collateral[e];
    if (sum == k + 1) ++paying_full;
  }
  EXPECT_EQ(paying_full, 1);
}

TEST(LargeAlpha, StarMatchesSolveStar) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    RandomStarProfile profile;
    profile.seed = seed;
    profile.large_alpha = true;
    const StarInstance star = random_star(profile);
    EXPECT_EQ(solve_large_alpha(star_network(star)).total, solve_star(star).total);
  }
}

TEST(LargeAlpha, MatchesExact) {
  int compared = 0;
  for (const auto& net : testing::random_networks(60, 6, 3, 1700, false, true)) {
    if (net.num_edges() > 14) continue;
    const Solution a = solve_large_alpha(net);
    const Solution b = solve_exact(net);
    ASSERT_EQ(a.status, b.status);
    if (a.status != SolveStatus::kSolved) continue;
    EXPECT_EQ(a.total, b.total);
    expect_consistent(net, a);
    for (EdgeId e = 0; e < net.num_edges(); ++e) {
      EXPECT_TRUE(a.collateral[e] == 0 || a.collateral.is_full(e));
      EXPECT_TRUE(b.collateral[e] == 0 || b.collateral.is_full(e));
    }
    ++compared;
  }
  EXPECT_GT(compared, 20);
}

TEST(LargeAlpha, Preconditions) {
  EXPECT_THROW(solve_large_alpha(testing::two_level_dag()), PreconditionError);
  SolverOptions tiny;
  tiny.large_alpha_node_limit = 3;
  EXPECT_THROW(solve_large_alpha(gen_cycle_family(7), tiny), TooLargeError);
}

TEST(Nec, EdgeCases) {
  // No edges at all.
  InvestmentNetwork empty(2);
  const Solution s = solve(empty);
  EXPECT_EQ(s.total, 0);
  EXPECT_EQ(s.nec, Rational(1));
  // Every star is free on its own but the network needs collateral: unbounded.
  Solution probe;
  probe.status = SolveStatus::kSolved;
  probe.total = 1;
  const auto free_star = star_network(make_star({4}, 1, 1));
  EXPECT_FALSE(compute_nec(free_star, probe).has_value());
  probe.total = 0;
  EXPECT_EQ(compute_nec(free_star, probe), Rational(1));
  probe.status = SolveStatus::kInfeasible;
  EXPECT_FALSE(compute_nec(free_star, probe).has_value());
}

TEST(Nec, CycleFamilyGrowsWithK) {
  EXPECT_EQ(compute_nec(gen_cycle_family(13), solve(gen_cycle_family(13))), Rational(3));
}

TEST(Dispatch, Methods) {
  EXPECT_EQ(dispatch_method(star_network(make_star({2, 2}, 1, 1))), Method::kStar);
  EXPECT_EQ(dispatch_method(testing::two_level_dag()), Method::kDag);
  EXPECT_EQ(dispatch_method(gen_cycle_family(3)), Method::kLargeAlpha);
  EXPECT_EQ(dispatch_method(testing::two_cycle(true)), Method::kExact);
  for (Method m : {Method::kAuto, Method::kStar, Method::kDag, Method::kExact, Method::kLargeAlpha}) {
    EXPECT_EQ(parse_method(method_name(m)), m);
  }
  EXPECT_FALSE(parse_method("simplex").has_value());
}

TEST(Solve, RefusesInvalidNetworks) {
  EXPECT_THROW(solve(testing::two_level_dag()), PreconditionError);  // Q is unprofitable
}

TEST(Solve, ExplicitMethodPreconditions) {
  const auto cycle = gen_cycle_family(3);
  EXPECT_THROW(solve(cycle, Method::kStar), PreconditionError);
  EXPECT_THROW(solve(cycle, Method::kDag), CyclicInputError);
  EXPECT_THROW(solve(testing::two_cycle(true), Method::kLargeAlpha), PreconditionError);
  try {
    solve(cycle, Method::kDag);
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("large-alpha"), std::string::npos) << e.what();
  }
}

TEST(Solve, StarMethodsAgree) {
  const auto net = star_network(make_star({5, 3, 2, 2}, 4, 2));
  const Solution star = solve(net, Method::kStar);
  expect_consistent(net, star);
  EXPECT_EQ(star.total, solve(net, Method::kExact).total);
  EXPECT_EQ(star.total, solve(net, Method::kDag).total);
  EXPECT_EQ(star.nec, Rational(1));
}

TEST(Solve, InfeasibleReportsWitness) {
  const Solution s = solve(testing::two_cycle(false, 1, 2));
  EXPECT_EQ(s.status, SolveStatus::kInfeasible);
  EXPECT_TRUE(s.witness.has_value());
  EXPECT_FALSE(s.nec.has_value());
}

TEST(Solve, FvsClaimStructure) {
  // Two disjoint 2-cycles plus a 3-cycle through vertex 0.
  DirectedGraph g;
  g.num_vertices = 6;
  g.arcs = {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {0, 4}, {4, 5}, {5, 0}};
  const auto net = gen_fvs_gadget(g);
  const int k = std::stoi(net.meta().at("k"));
  const Solution s = solve(net);
  ASSERT_EQ(s.status, SolveStatus::kSolved);
  std::vector<VertexId> secured;
  for (VertexId v : net.enterprises()) {
    Money sum = 0;
    for (EdgeId e : net.out_edges(v)) sum += s.collateral[e];
    EXPECT_TRUE(sum == 2 || sum == k + 1) << net.name(v) << " pays " << sum;
    if (sum == k + 1) secured.push_back(v);
  }
  // Vertex 0 hits both cycles through it; 2 or 3 covers the other.
  EXPECT_EQ(secured.size(), 2u);
  EXPECT_NE(std::find(secured.begin(), secured.end(), *net.find_vertex("g0")), secured.end());
}

}  // namespace
}  // namespace collat
