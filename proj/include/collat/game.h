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

// Evaluation of the investment game: default cascades, enterprise returns,
// utilities and best responses.
//
// Tie rule: a player that is indifferent between investing (cooperating and
// not defaulting) and defecting invests. This is the only tie rule in the
// library; every "prefers to cooperate" test below is a weak inequality.

#ifndef COLLAT_GAME_H_
#define COLLAT_GAME_H_

#include <optional>
#include <vector>

#include "collat/edge_set.h"
#include "collat/network.h"
#include "collat/rational.h"

namespace collat {

enum class Action { kCooperate, kDefect };

// Fixed point of the default cascade for a cooperate set.
struct InvestState {
  std::vector<bool> defaulted;  // by vertex
  EdgeSet invest;

  bool is_defaulted(VertexId v) const { return defaulted[v]; }
  std::vector<VertexId> defaulted_vertices() const;
};

// Runs the cascade repeatedly on one network without reallocating. Hot loops
// (elimination, the subset DP) go through this.
class CascadeEvaluator {
 public:
  explicit CascadeEvaluator(const InvestmentNetwork& net);

  const InvestState& run(const EdgeSet& cooperate);

  // Amount invested in k's enterprise under the last run.
  const Money& raised(VertexId k) const { return raised_[k]; }

  // Return on e under the last run; e must be an invest edge.
  Money enterprise_return(EdgeId e) const;

  // Smallest collateral on e that makes cooperating a (tie-broken) best
  // response under the last run, which must have e cooperating. nullopt when
  // e's investor is in default, i.e. no collateral suffices.
  std::optional<Money> shortfall(EdgeId e) const;

 private:
  const InvestmentNetwork* net_;
  InvestState state_;
  std::vector<Money> raised_;
  std::vector<VertexId> queue_;
};

// Least fixed point of the cascade: starting from I = cooperate and T empty,
// an enterprise whose invested amount is strictly below its cost defaults and
// every edge on which it is the investor leaves I. Independent of processing
// order. Raised capital exactly equal to the cost is solvent.
InvestState default_determination(const InvestmentNetwork& net, const EdgeSet& cooperate);

// max(0, (1 + a_k)(S - Z_k) x_e / S) with S the amount invested in k.
// Throws std::invalid_argument if e is not an invest edge.
Money enterprise_return(const InvestmentNetwork& net, const EdgeSet& invest, EdgeId e);

// Payoff of e's investor from e: x_e when defecting, 0 when cooperating while
// in default, otherwise min(R + c, x) if R <= x and R if R > x.
Money edge_utility(const InvestmentNetwork& net, const CollateralMatrix& c,
                   const EdgeSet& cooperate, EdgeId e);
Money edge_utility(const InvestmentNetwork& net, const CollateralMatrix& c,
                   const EdgeSet& cooperate, const InvestState& state, EdgeId e);

Money player_utility(const InvestmentNetwork& net, const CollateralMatrix& c,
                     const EdgeSet& cooperate, VertexId player);

// Best response on e with every other edge held at `cooperate`.
Action best_response(const InvestmentNetwork& net, const CollateralMatrix& c,
                     const EdgeSet& cooperate, EdgeId e);

bool is_nash_equilibrium(const InvestmentNetwork& net, const CollateralMatrix& c,
                         const EdgeSet& cooperate);

}  // namespace collat

#endif  // COLLAT_GAME_H_
