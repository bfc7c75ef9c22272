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

#include "collat/network_solver.h"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

#include "collat/errors.h"
#include "collat/game.h"

namespace collat {
namespace {

void attach_star_totals(const InvestmentNetwork& net, Solution& solution, unsigned jobs) {
  solution.star_totals.clear();
  solution.star_sum = 0;
  for (const StarComponent& component : star_decomposition(net)) {
    Money total = solve_star(component.star, jobs).total;
    solution.star_sum += total;
    solution.star_totals.push_back(StarTotal{component.enterprise, std::move(total)});
  }
}

std::optional<Rational> nec_from(const Solution& solution) {
  if (solution.status != SolveStatus::kSolved) return std::nullopt;
  if (solution.star_sum == 0) {
    if (solution.total == 0) return Rational(1);
    return std::nullopt;
  }
  return Rational(solution.total / solution.star_sum);
}

void finish(const InvestmentNetwork& net, Solution& solution, unsigned jobs) {
  attach_star_totals(net, solution, jobs);
  solution.nec = nec_from(solution);
}

Solution infeasible(const InvestmentNetwork& net, Method method, SolvabilityReport report,
                    unsigned jobs) {
  Solution solution;
  solution.status = SolveStatus::kInfeasible;
  solution.method = method;
  solution.collateral = CollateralMatrix::zero(net);
  solution.total = 0;
  solution.witness = std::move(report.witness);
  finish(net, solution, jobs);
  return solution;
}

// Masks of `width` bits with exactly `ones` set, ascending.
std::vector<std::uint32_t> masks_with_popcount(unsigned width, unsigned ones) {
  std::vector<std::uint32_t> out;
  if (ones == 0) {
    out.push_back(0);
    return out;
  }
  if (ones > width) return out;
  std::uint64_t mask = (std::uint64_t{1} << ones) - 1;
  const std::uint64_t limit = std::uint64_t{1} << width;
  while (mask < limit) {
    out.push_back(static_cast<std::uint32_t>(mask));
    // Gosper's hack: next larger integer with the same popcount.
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
  return out;
}

constexpr std::int8_t kUnreachable = -1;
constexpr std::int8_t kRoot = -2;

struct SubsetTable {
  std::vector<Money> cost;
  std::vector<std::int8_t> last;  // edge resolved last on the best path
};

void relax_mask(const InvestmentNetwork& net, CascadeEvaluator& evaluator, SubsetTable& table,
                std::uint32_t mask) {
  const std::size_t m = net.num_edges();
  evaluator.run(EdgeSet::from_mask(m, mask));
  std::int8_t best_edge = kUnreachable;
  Money best;
  std::uint32_t rest = mask;
  while (rest != 0) {
    const int e = std::countr_zero(rest);
    rest &= rest - 1;
    const std::uint32_t prev = mask & ~(std::uint32_t{1} << e);
    if (table.last[prev] == kUnreachable) continue;
    const std::optional<Money> gap = evaluator.shortfall(static_cast<EdgeId>(e));
    if (!gap) continue;
    Money candidate = table.cost[prev] + *gap;
    if (best_edge == kUnreachable || candidate < best) {
      best = std::move(candidate);
      best_edge = static_cast<std::int8_t>(e);
    }
  }
  table.last[mask] = best_edge;
  if (best_edge != kUnreachable) table.cost[mask] = std::move(best);
}

// Builds the collateral matrix and order for a full-collateral edge set
// chosen by the large-alpha search.
Solution from_full_set(const InvestmentNetwork& net, std::uint64_t mask, Method method) {
  Solution solution;
  solution.method = method;
  solution.collateral = CollateralMatrix::zero(net);
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    if ((mask >> e) & 1u) solution.collateral.set(e, net.amount(e));
  }
  solution.total = solution.collateral.total();
  solution.order = iterated_elimination(net, solution.collateral).resolved;
  return solution;
}

std::string describe_dispatch(const InvestmentNetwork& net) {
  return "the dispatcher would use '" + std::string(method_name(dispatch_method(net))) + "'";
}

}  // namespace

std::vector<StarComponent> star_decomposition(const InvestmentNetwork& net) {
  std::vector<StarComponent> out;
  for (VertexId k : net.enterprises()) {
    StarComponent component;
    component.enterprise = k;
    component.star.cost = net.cost(k);
    component.star.rate = net.rate(k);
    for (EdgeId e : net.out_edges(k)) {
      component.star.investments.push_back(net.amount(e));
      component.edges.push_back(e);
    }
    out.push_back(std::move(component));
  }
  return out;
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kAuto:
      return "auto";
    case Method::kStar:
      return "star";
    case Method::kDag:
      return "dag";
    case Method::kExact:
      return "exact";
    case Method::kLargeAlpha:
      return "large-alpha";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : {Method::kAuto, Method::kStar, Method::kDag, Method::kExact, Method::kLargeAlpha}) {
    if (method_name(m) == name) return m;
  }
  return std::nullopt;
}

std::optional<std::vector<VertexId>> topological_order(const InvestmentNetwork& net) {
  const std::size_t n = net.num_vertices();
  std::vector<std::size_t> indegree(n, 0);
  for (const Edge& edge : net.edges()) ++indegree[edge.investor];
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<VertexId> order;
  order.reserve(n);
  while (!ready.empty()) {
    const VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (EdgeId e : net.out_edges(v)) {
      if (--indegree[net.edge(e).investor] == 0) ready.push(net.edge(e).investor);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

bool is_acyclic(const InvestmentNetwork& net) { return topological_order(net).has_value(); }

Solution solve_dag(const InvestmentNetwork& net, const SolverOptions& options) {
  const std::optional<std::vector<VertexId>> topo = topological_order(net);
  if (!topo) throw CyclicInputError("network has a directed cycle; use the exact solver");
  SolvabilityReport report = solvability_check(net);
  if (!report.solvable) return infeasible(net, Method::kDag, std::move(report), options.jobs);

  const std::vector<StarComponent> stars = star_decomposition(net);
  std::vector<std::optional<StarSolution>> by_vertex(net.num_vertices());
  Solution solution;
  solution.method = Method::kDag;
  solution.collateral = CollateralMatrix::zero(net);
  for (const StarComponent& component : stars) {
    StarSolution star = solve_star(component.star, options.jobs);
    for (std::size_t i = 0; i < component.edges.size(); ++i) {
      solution.collateral.set(component.edges[i], star.collateral[i]);
    }
    by_vertex[component.enterprise] = std::move(star);
  }
  // Reverse topological order: an enterprise's investors come first.
  for (auto it = topo->rbegin(); it != topo->rend(); ++it) {
    const VertexId k = *it;
    if (!by_vertex[k]) continue;
    const auto edges = net.out_edges(k);
    for (std::size_t player : by_vertex[k]->order) solution.order.push_back(edges[player]);
  }
  solution.total = solution.collateral.total();
  finish(net, solution, options.jobs);
  return solution;
}

std::optional<Money> minimal_matrix_for_resolved_set(const InvestmentNetwork& net,
                                                     const EdgeSet& resolved, EdgeId e) {
  if (resolved.contains(e)) {
    throw std::invalid_argument("edge " + net.edge_label(e) + " is already resolved");
  }
  CascadeEvaluator evaluator(net);
  evaluator.run(resolved.with(e));
  return evaluator.shortfall(e);
}

Solution solve_exact(const InvestmentNetwork& net, const SolverOptions& options) {
  const std::size_t m = net.num_edges();
  if (m > kMaxExactEdges) {
    throw TooLargeError("exact solver supports at most " + std::to_string(kMaxExactEdges) +
                        " edges; network has " + std::to_string(m));
  }
  SolvabilityReport report = solvability_check(net);
  if (!report.solvable) return infeasible(net, Method::kExact, std::move(report), options.jobs);

  const std::size_t num_masks = std::size_t{1} << m;
  SubsetTable table;
  table.cost.resize(num_masks);
  table.last.assign(num_masks, kUnreachable);
  table.cost[0] = 0;
  table.last[0] = kRoot;

  const unsigned workers = std::max(options.jobs, 1u);
  if (workers == 1) {
    CascadeEvaluator evaluator(net);
    for (std::uint32_t mask = 1; mask < num_masks; ++mask) relax_mask(net, evaluator, table, mask);
  } else {
    // Layers by popcount; each state depends only on the previous layer.
    for (unsigned ones = 1; ones <= m; ++ones) {
      const std::vector<std::uint32_t> layer = masks_with_popcount(static_cast<unsigned>(m), ones);
      const std::size_t chunk = (layer.size() + workers - 1) / workers;
      std::vector<std::jthread> threads;
      for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(layer.size(), lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([&, lo, hi] {
          CascadeEvaluator evaluator(net);
          for (std::size_t j = lo; j < hi; ++j) relax_mask(net, evaluator, table, layer[j]);
        });
      }
    }
  }

  const std::uint32_t full = static_cast<std::uint32_t>(num_masks - 1);
  if (table.last[full] == kUnreachable) {
    // Unreachable only if the solvability check and the DP disagree.
    throw Error("internal error: solvable network has no elimination order");
  }
  Solution solution;
  solution.method = Method::kExact;
  solution.collateral = CollateralMatrix::zero(net);
  std::uint32_t mask = full;
  while (mask != 0) {
    const auto e = static_cast<EdgeId>(table.last[mask]);
    const std::uint32_t prev = mask & ~(std::uint32_t{1} << e);
    solution.collateral.set(e, table.cost[mask] - table.cost[prev]);
    solution.order.push_back(e);
    mask = prev;
  }
  std::reverse(solution.order.begin(), solution.order.end());
  solution.total = table.cost[full];
  finish(net, solution, options.jobs);
  return solution;
}

Solution solve_large_alpha(const InvestmentNetwork& net, const SolverOptions& options) {
  if (!is_large_alpha(net)) {
    throw PreconditionError(
        "large-alpha solver needs integer amounts and costs with alpha_k > Z_k at every "
        "enterprise");
  }
  const std::size_t m = net.num_edges();
  if (m > 64) {
    throw TooLargeError("large-alpha search supports at most 64 edges; network has " +
                        std::to_string(m));
  }
  SolvabilityReport report = solvability_check(net);
  if (!report.solvable) {
    return infeasible(net, Method::kLargeAlpha, std::move(report), options.jobs);
  }

  // Any viable matrix restricted to a star is viable for the star alone, so
  // each star's share of a candidate must reach that star's optimum.
  const std::vector<StarComponent> stars = star_decomposition(net);
  std::vector<Money> star_floor;
  std::vector<std::uint64_t> star_mask;
  for (const StarComponent& component : stars) {
    star_floor.push_back(solve_star(component.star, options.jobs).total);
    std::uint64_t bits = 0;
    for (EdgeId e : component.edges) bits |= std::uint64_t{1} << e;
    star_mask.push_back(bits);
  }
  auto passes_floors = [&](std::uint64_t mask) {
    for (std::size_t s = 0; s < stars.size(); ++s) {
      Money share = 0;
      for (EdgeId e : stars[s].edges) {
        if ((mask >> e) & 1u) share += net.amount(e);
      }
      if (share < star_floor[s]) return false;
    }
    return true;
  };

  std::vector<EdgeId> ascending(m);
  for (EdgeId e = 0; e < m; ++e) ascending[e] = e;
  std::stable_sort(ascending.begin(), ascending.end(),
                   [&](EdgeId a, EdgeId b) { return net.amount(a) < net.amount(b); });

  // Every subset exactly once in nondecreasing total: a node whose largest
  // position in `ascending` is j spawns "add j+1" and "swap j for j+1".
  struct Node {
    Money sum;
    std::uint64_t mask;
    int last;
  };
  auto later = [](const Node& a, const Node& b) {
    if (a.sum != b.sum) return a.sum > b.sum;
    return a.mask > b.mask;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(later)> frontier(later);
  frontier.push(Node{Money(0), 0, -1});

  std::uint64_t expanded = 0;
  while (!frontier.empty()) {
    Node node = frontier.top();
    frontier.pop();
    if (++expanded > options.large_alpha_node_limit) {
      throw TooLargeError("large-alpha search exceeded " +
                          std::to_string(options.large_alpha_node_limit) + " nodes");
    }
    if (passes_floors(node.mask)) {
      CollateralMatrix c = CollateralMatrix::zero(net);
      for (EdgeId e = 0; e < m; ++e) {
        if ((node.mask >> e) & 1u) c.set(e, net.amount(e));
      }
      if (is_viable(net, c)) {
        Solution solution = from_full_set(net, node.mask, Method::kLargeAlpha);
        finish(net, solution, options.jobs);
        return solution;
      }
    }
    const int next = node.last + 1;
    if (next < static_cast<int>(m)) {
      const EdgeId add = ascending[next];
      frontier.push(Node{node.sum + net.amount(add), node.mask | (std::uint64_t{1} << add), next});
      if (node.last >= 0) {
        const EdgeId drop = ascending[node.last];
        frontier.push(Node{node.sum - net.amount(drop) + net.amount(add),
                           (node.mask & ~(std::uint64_t{1} << drop)) | (std::uint64_t{1} << add),
                           next});
      }
    }
  }
  throw Error("internal error: solvable network has no viable all-or-nothing matrix");
}

std::optional<Rational> compute_nec(const InvestmentNetwork& net, const Solution& solution) {
  Solution probe;
  probe.status = solution.status;
  probe.total = solution.total;
  attach_star_totals(net, probe, 1);
  return nec_from(probe);
}

Method dispatch_method(const InvestmentNetwork& net) {
  if (net.enterprises().size() == 1) return Method::kStar;
  if (is_acyclic(net)) return Method::kDag;
  if (is_large_alpha(net)) return Method::kLargeAlpha;
  return Method::kExact;
}

Solution solve(const InvestmentNetwork& net, Method method, const SolverOptions& options) {
  const ValidationReport validation = validate_network(net);
  if (!validation.ok()) {
    std::string message = "invalid network:";
    for (const Violation& v : validation.violations) message += "\n  " + v.message;
    throw PreconditionError(message);
  }
  const Method chosen = method == Method::kAuto ? dispatch_method(net) : method;
  switch (chosen) {
    case Method::kStar: {
      const std::vector<StarComponent> stars = star_decomposition(net);
      if (stars.size() != 1) {
        throw PreconditionError("method 'star' needs exactly one enterprise; " +
                                describe_dispatch(net));
      }
      Solution solution;
      solution.method = Method::kStar;
      solution.collateral = CollateralMatrix::zero(net);
      const StarSolution star = solve_star(stars[0].star, options.jobs);
      for (std::size_t i = 0; i < star.collateral.size(); ++i) {
        solution.collateral.set(stars[0].edges[i], star.collateral[i]);
      }
      for (std::size_t player : star.order) solution.order.push_back(stars[0].edges[player]);
      solution.total = star.total;
      finish(net, solution, options.jobs);
      return solution;
    }
    case Method::kDag:
      if (!is_acyclic(net)) {
        throw CyclicInputError("method 'dag' needs an acyclic network; " + describe_dispatch(net));
      }
      return solve_dag(net, options);
    case Method::kLargeAlpha:
      if (!is_large_alpha(net)) {
        throw PreconditionError("method 'large-alpha' needs integer input with alpha_k > Z_k; " +
                                describe_dispatch(net));
      }
      return solve_large_alpha(net, options);
    case Method::kExact:
    case Method::kAuto:
      return solve_exact(net, options);
  }
  return solve_exact(net, options);
}

}  // namespace collat
