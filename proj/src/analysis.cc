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

#include "collat/analysis.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "collat/game.h"

namespace collat {
namespace {

// Elimination closure; `excluded` (if any) is never resolved.
EliminationResult closure(const InvestmentNetwork& net, const CollateralMatrix& c,
                          std::span<const EdgeId> scan_order,
                          std::optional<EdgeId> excluded = std::nullopt) {
  CascadeEvaluator evaluator(net);
  EdgeSet resolved(net.num_edges());
  EliminationResult result;
  bool progress = true;
  while (progress) {
    progress = false;
    for (EdgeId e : scan_order) {
      if (resolved.contains(e) || excluded == e) continue;
      evaluator.run(resolved.with(e));
      const std::optional<Money> gap = evaluator.shortfall(e);
      if (gap && c[e] >= *gap) {
        resolved.insert(e);
        result.resolved.push_back(e);
        progress = true;
      }
    }
  }
  result.stuck = EdgeSet(net.num_edges());
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    if (!resolved.contains(e)) result.stuck.insert(e);
  }
  return result;
}

std::vector<EdgeId> identity_order(std::size_t n) {
  std::vector<EdgeId> order(n);
  std::iota(order.begin(), order.end(), EdgeId{0});
  return order;
}

Money co_investment(const InvestmentNetwork& net, VertexId k,
                    std::span<const VertexId> co_investors, VertexId i) {
  const std::optional<EdgeId> own = net.find_edge(k, i);
  if (!own) {
    throw std::invalid_argument("no edge from " + net.name(k) + " to " + net.name(i));
  }
  Money sum = net.amount(*own);
  for (VertexId j : co_investors) {
    if (j == i) {
      throw std::invalid_argument("player " + net.name(i) + " is in its own co-investor set");
    }
    const std::optional<EdgeId> e = net.find_edge(k, j);
    if (!e) {
      throw std::invalid_argument(net.name(j) + " is not an investor of " + net.name(k));
    }
    sum += net.amount(*e);
  }
  return sum;
}

// Tarjan's algorithm restricted to `members`; edges run enterprise -> investor.
std::vector<int> strongly_connected_components(const InvestmentNetwork& net,
                                               const std::vector<bool>& members,
                                               int& num_components) {
  const std::size_t n = net.num_vertices();
  std::vector<int> index(n, -1), low(n, 0), component(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  int next_index = 0;
  num_components = 0;

  // Iterative DFS: frames of (vertex, next out-edge position).
  std::vector<std::pair<VertexId, std::size_t>> frames;
  for (VertexId root = 0; root < n; ++root) {
    if (!members[root] || index[root] != -1) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto outs = net.out_edges(v);
      if (pos < outs.size()) {
        const VertexId w = net.edge(outs[pos++]).investor;
        if (!members[w]) continue;
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const VertexId done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const VertexId parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = num_components;
        } while (w != done);
        ++num_components;
      }
    }
  }
  return component;
}

Money outside_inflow(const InvestmentNetwork& net, VertexId k, const std::vector<bool>& inside) {
  Money sum = 0;
  for (EdgeId e : net.out_edges(k)) {
    if (!inside[net.edge(e).investor]) sum += net.amount(e);
  }
  return sum;
}

InfeasibilityWitness build_witness(const InvestmentNetwork& net, const std::vector<bool>& stuck) {
  int num_components = 0;
  const std::vector<int> component = strongly_connected_components(net, stuck, num_components);
  // A component is a sink if no edge leaves it to another stuck vertex. Every
  // stuck enterprise has a stuck investor, so sink components are nontrivial.
  std::vector<bool> is_sink(num_components, true);
  std::vector<int> size(num_components, 0);
  for (VertexId v = 0; v < net.num_vertices(); ++v) {
    if (!stuck[v]) continue;
    ++size[component[v]];
    for (EdgeId e : net.out_edges(v)) {
      const VertexId w = net.edge(e).investor;
      if (stuck[w] && component[w] != component[v]) is_sink[component[v]] = false;
    }
  }
  std::vector<bool> inside(net.num_vertices(), false);
  InfeasibilityWitness witness;
  for (VertexId v = 0; v < net.num_vertices(); ++v) {
    if (stuck[v] && is_sink[component[v]] && size[component[v]] > 1) {
      inside[v] = true;
      witness.vertices.push_back(v);
    }
  }
  for (VertexId v : witness.vertices) {
    witness.shortfalls.push_back(Shortfall{v, outside_inflow(net, v, inside), net.cost(v)});
  }
  return witness;
}

}  // namespace

EliminationResult iterated_elimination(const InvestmentNetwork& net, const CollateralMatrix& c) {
  const std::vector<EdgeId> order = identity_order(net.num_edges());
  return closure(net, c, order);
}

EliminationResult iterated_elimination(const InvestmentNetwork& net, const CollateralMatrix& c,
                                       std::span<const EdgeId> scan_order) {
  return closure(net, c, scan_order);
}

bool is_viable(const InvestmentNetwork& net, const CollateralMatrix& c) {
  return iterated_elimination(net, c).all_resolved();
}

bool is_valid_elimination_order(const InvestmentNetwork& net, const CollateralMatrix& c,
                                std::span<const EdgeId> order) {
  if (order.size() != net.num_edges()) return false;
  CascadeEvaluator evaluator(net);
  EdgeSet prefix(net.num_edges());
  for (EdgeId e : order) {
    if (e >= net.num_edges() || prefix.contains(e)) return false;
    prefix.insert(e);
    evaluator.run(prefix);
    const std::optional<Money> gap = evaluator.shortfall(e);
    if (!gap || c[e] < *gap) return false;
  }
  return true;
}

std::optional<Money> minimal_coordinate(const InvestmentNetwork& net, const CollateralMatrix& c,
                                        EdgeId e) {
  const std::vector<EdgeId> order = identity_order(net.num_edges());
  const EliminationResult without = closure(net, c, order, e);
  EdgeSet resolved(net.num_edges());
  for (EdgeId f : without.resolved) resolved.insert(f);
  resolved.insert(e);
  CascadeEvaluator evaluator(net);
  evaluator.run(resolved);
  std::optional<Money> gap = evaluator.shortfall(e);
  if (!gap) return std::nullopt;
  CollateralMatrix lowered = c;
  lowered.set(e, *gap);
  if (!is_viable(net, lowered)) return std::nullopt;
  return gap;
}

bool is_minimal(const InvestmentNetwork& net, const CollateralMatrix& c) {
  if (!is_viable(net, c)) return false;
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    if (c[e] == 0) continue;
    const std::optional<Money> floor = minimal_coordinate(net, c, e);
    if (floor && *floor < c[e]) return false;
  }
  return true;
}

bool is_valid_witness(const InvestmentNetwork& net, const InfeasibilityWitness& witness) {
  if (witness.vertices.empty()) return false;
  std::vector<bool> inside(net.num_vertices(), false);
  for (VertexId v : witness.vertices) {
    if (v >= net.num_vertices()) return false;
    inside[v] = true;
  }
  for (VertexId v : witness.vertices) {
    // v is on a cycle iff some investor of v inside the witness reaches v.
    std::vector<bool> seen(net.num_vertices(), false);
    std::vector<VertexId> frontier;
    for (EdgeId e : net.out_edges(v)) {
      const VertexId w = net.edge(e).investor;
      if (inside[w] && !seen[w]) {
        seen[w] = true;
        frontier.push_back(w);
      }
    }
    while (!frontier.empty() && !seen[v]) {
      const VertexId u = frontier.back();
      frontier.pop_back();
      for (EdgeId e : net.out_edges(u)) {
        const VertexId w = net.edge(e).investor;
        if (inside[w] && !seen[w]) {
          seen[w] = true;
          frontier.push_back(w);
        }
      }
    }
    if (!seen[v]) return false;
    if (net.is_enterprise(v) && !(outside_inflow(net, v, inside) < net.cost(v))) return false;
  }
  return true;
}

SolvabilityReport solvability_check(const InvestmentNetwork& net) {
  const std::size_t n = net.num_vertices();
  std::vector<bool> alive(n, false);
  for (VertexId v = 0; v < n; ++v) alive[v] = net.is_enterprise(v);
  VertexId next_synthetic = n;

  SolvabilityReport report;
  bool removed = true;
  while (removed) {
    removed = false;
    for (VertexId k = 0; k < n; ++k) {
      if (!alive[k]) continue;
      Money inflow = 0;
      for (EdgeId e : net.out_edges(k)) {
        if (!alive[net.edge(e).investor]) inflow += net.amount(e);
      }
      if (inflow < net.cost(k)) continue;
      ReductionStep step{k, inflow, {}};
      for (EdgeId e : net.in_edges(k)) {
        if (alive[net.edge(e).enterprise]) step.spikes.push_back(SyntheticSpike{next_synthetic++, e});
      }
      report.steps.push_back(std::move(step));
      alive[k] = false;
      removed = true;
      break;
    }
  }
  report.solvable = std::none_of(alive.begin(), alive.end(), [](bool b) { return b; });
  if (!report.solvable) report.witness = build_witness(net, alive);
  return report;
}

bool zero_collateral_condition(const InvestmentNetwork& net, VertexId k,
                               std::span<const VertexId> co_investors, VertexId i) {
  const Rational& alpha = net.rate(k);
  if (alpha <= 0) {
    throw std::invalid_argument("enterprise " + net.name(k) + " needs a positive rate");
  }
  const Money sum = co_investment(net, k, co_investors, i);
  return sum * alpha >= net.cost(k) * (alpha + 1);
}

bool full_collateral_condition(const InvestmentNetwork& net, VertexId k,
                               std::span<const VertexId> co_investors, VertexId i) {
  return co_investment(net, k, co_investors, i) <= net.cost(k);
}

bool is_large_alpha(const InvestmentNetwork& net) {
  for (const Edge& edge : net.edges()) {
    if (!is_integer(edge.amount)) return false;
  }
  for (VertexId k : net.enterprises()) {
    if (!is_integer(net.cost(k)) || !(net.rate(k) > net.cost(k))) return false;
  }
  return true;
}

}  // namespace collat
