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

#ifndef COLLAT_NETWORK_SOLVER_H_
#define COLLAT_NETWORK_SOLVER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "collat/analysis.h"
#include "collat/network.h"
#include "collat/rational.h"
#include "collat/star_solver.h"

namespace collat {

inline constexpr std::size_t kMaxExactEdges = 20;
inline constexpr std::uint64_t kDefaultLargeAlphaNodeLimit = std::uint64_t{1} << 22;

struct SolverOptions {
  unsigned jobs = 1;
  std::uint64_t large_alpha_node_limit = kDefaultLargeAlphaNodeLimit;
};

// One enterprise, its investors and its outgoing edges. edges[i] is the
// network edge of star player i.
struct StarComponent {
  VertexId enterprise;
  StarInstance star;
  std::vector<EdgeId> edges;
};

// One star per enterprise vertex, in vertex order.
std::vector<StarComponent> star_decomposition(const InvestmentNetwork& net);

enum class Method { kAuto, kStar, kDag, kExact, kLargeAlpha };
enum class SolveStatus { kSolved, kInfeasible };

std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);

struct StarTotal {
  VertexId enterprise;
  Money total;
};

struct Solution {
  SolveStatus status = SolveStatus::kSolved;
  Method method = Method::kAuto;
  CollateralMatrix collateral;
  Money total;
  EliminationOrder order;
  std::vector<StarTotal> star_totals;
  Money star_sum;
  // Ratio of the network optimum to the star-decomposition sum; nullopt when
  // unbounded (positive total over a zero star sum) or when infeasible.
  std::optional<Rational> nec;
  std::optional<InfeasibilityWitness> witness;
};

std::optional<std::vector<VertexId>> topological_order(const InvestmentNetwork& net);
bool is_acyclic(const InvestmentNetwork& net);

// Solves every star on its own and sequences them so that an enterprise's
// investors are secured before it. Throws CyclicInputError on a cycle.
Solution solve_dag(const InvestmentNetwork& net, const SolverOptions& options = {});

// Least collateral on e that makes investing a best response when exactly
// `resolved` and e cooperate; nullopt if e's investor defaults there.
std::optional<Money> minimal_matrix_for_resolved_set(const InvestmentNetwork& net,
                                                     const EdgeSet& resolved, EdgeId e);

// Dynamic program over resolved edge sets. Since the minimal collateral of a
// step depends only on the set resolved so far, the optimum over all
// elimination orders is a shortest path in the subset lattice. Throws
// TooLargeError above kMaxExactEdges.
Solution solve_exact(const InvestmentNetwork& net, const SolverOptions& options = {});

// All-or-nothing search for the large-alpha regime: candidate full-collateral
// sets in nondecreasing total, first viable one wins. Throws
// PreconditionError outside the regime.
Solution solve_large_alpha(const InvestmentNetwork& net, const SolverOptions& options = {});

// total / sum of star optima.
std::optional<Rational> compute_nec(const InvestmentNetwork& net, const Solution& solution);

// Validates, checks solvability, then dispatches: single star, DAG, large
// alpha, exact. Throws PreconditionError for invalid networks or when an
// explicit method does not apply.
Solution solve(const InvestmentNetwork& net, Method method = Method::kAuto,
               const SolverOptions& options = {});

// The method kAuto resolves to for this network.
Method dispatch_method(const InvestmentNetwork& net);

}  // namespace collat

#endif  // COLLAT_NETWORK_SOLVER_H_
