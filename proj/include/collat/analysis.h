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

// Equilibrium structure of the investment game under a collateral matrix.
//
// An edge e can be eliminated (its defect strategy removed) once, with the
// already-resolved edges cooperating and every other edge defecting, e's
// investor is solvent and weakly prefers to invest. Preferences are monotone
// in the cooperate set, so the greedy closure is unique and is the least Nash
// equilibrium. A matrix is viable (all-cooperate is the unique equilibrium)
// exactly when the closure is the whole edge set.

#ifndef COLLAT_ANALYSIS_H_
#define COLLAT_ANALYSIS_H_

#include <optional>
#include <span>
#include <vector>

#include "collat/edge_set.h"
#include "collat/network.h"
#include "collat/rational.h"

namespace collat {

using EliminationOrder = std::vector<EdgeId>;

struct EliminationResult {
  EliminationOrder resolved;
  EdgeSet stuck;

  bool all_resolved() const { return stuck.empty(); }
};

// Greedy elimination scanning unresolved edges in index order.
EliminationResult iterated_elimination(const InvestmentNetwork& net, const CollateralMatrix& c);

// Same closure, scanning in `scan_order` (a permutation of the edges).
EliminationResult iterated_elimination(const InvestmentNetwork& net, const CollateralMatrix& c,
                                       std::span<const EdgeId> scan_order);

bool is_viable(const InvestmentNetwork& net, const CollateralMatrix& c);

// Checks every position of a complete order: with sigma_1..sigma_t
// cooperating and the rest defecting, sigma_t's investor is solvent and
// weakly prefers to invest.
bool is_valid_elimination_order(const InvestmentNetwork& net, const CollateralMatrix& c,
                                std::span<const EdgeId> order);

// Smallest value of c_e that keeps `c` viable with every other coordinate
// fixed, or nullopt if no value of c_e does.
std::optional<Money> minimal_coordinate(const InvestmentNetwork& net, const CollateralMatrix& c,
                                        EdgeId e);

// Viable and no coordinate can be lowered while staying viable.
bool is_minimal(const InvestmentNetwork& net, const CollateralMatrix& c);

struct Shortfall {
  VertexId enterprise;
  Money outside_inflow;
  Money cost;
};

// Sub-network that no collateral scheme can stabilize: every vertex lies on a
// directed cycle inside it and every enterprise in it raises strictly less
// than its cost from investors outside it.
struct InfeasibilityWitness {
  std::vector<VertexId> vertices;
  std::vector<Shortfall> shortfalls;
};

// Checks both witness conditions directly.
bool is_valid_witness(const InvestmentNetwork& net, const InfeasibilityWitness& witness);

struct SyntheticSpike {
  VertexId id;  // numbered from num_vertices() upwards
  EdgeId replaces;
};

struct ReductionStep {
  VertexId enterprise;
  Money spike_inflow;
  std::vector<SyntheticSpike> spikes;
};

struct SolvabilityReport {
  bool solvable = false;
  std::vector<ReductionStep> steps;
  std::optional<InfeasibilityWitness> witness;
};

// Repeatedly removes an enterprise whose inflow from non-enterprise investors
// covers its cost, turning its own investments into fresh spike investors.
// Solvable iff the graph empties.
SolvabilityReport solvability_check(const InvestmentNetwork& net);

// x_i + sum_{j in A} x_kj >= Z_k (1 + 1/a_k).
bool zero_collateral_condition(const InvestmentNetwork& net, VertexId k,
                               std::span<const VertexId> co_investors, VertexId i);

// x_i + sum_{j in A} x_kj <= Z_k.
bool full_collateral_condition(const InvestmentNetwork& net, VertexId k,
                               std::span<const VertexId> co_investors, VertexId i);

// Integer amounts and costs, and a_k > Z_k at every enterprise. Optimal
// collaterals are then all-or-nothing.
bool is_large_alpha(const InvestmentNetwork& net);

}  // namespace collat

#endif  // COLLAT_ANALYSIS_H_
