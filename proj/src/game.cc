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

#include "collat/game.h"

#include <algorithm>
#include <stdexcept>

namespace collat {
namespace {

Money proportional_return(const InvestmentNetwork& net, VertexId k, const Money& invested,
                          const Money& amount) {
  if (invested <= 0) return 0;
  Money r = (1 + net.rate(k)) * (invested - net.cost(k)) * amount / invested;
  return r < 0 ? Money(0) : r;
}

}  // namespace

std::vector<VertexId> InvestState::defaulted_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < defaulted.size(); ++v) {
    if (defaulted[v]) out.push_back(v);
  }
  return out;
}

CascadeEvaluator::CascadeEvaluator(const InvestmentNetwork& net)
    : net_(&net), raised_(net.num_vertices(), Money(0)) {
  state_.defaulted.assign(net.num_vertices(), false);
  queue_.reserve(net.num_vertices());
}

const InvestState& CascadeEvaluator::run(const EdgeSet& cooperate) {
  const InvestmentNetwork& net = *net_;
  state_.invest = cooperate;
  std::fill(state_.defaulted.begin(), state_.defaulted.end(), false);
  for (Money& r : raised_) r = 0;
  queue_.clear();

  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    if (cooperate.contains(e)) raised_[net.edge(e).enterprise] += net.amount(e);
  }
  for (VertexId k = 0; k < net.num_vertices(); ++k) {
    if (net.is_enterprise(k) && raised_[k] < net.cost(k)) queue_.push_back(k);
  }
  while (!queue_.empty()) {
    const VertexId t = queue_.back();
    queue_.pop_back();
    if (state_.defaulted[t]) continue;
    state_.defaulted[t] = true;
    for (EdgeId e : net.in_edges(t)) {
      if (!state_.invest.contains(e)) continue;
      state_.invest.erase(e);
      const VertexId k = net.edge(e).enterprise;
      raised_[k] -= net.amount(e);
      if (!state_.defaulted[k] && raised_[k] < net.cost(k)) queue_.push_back(k);
    }
  }
  return state_;
}

Money CascadeEvaluator::enterprise_return(EdgeId e) const {
  const Edge& edge = net_->edge(e);
  return proportional_return(*net_, edge.enterprise, raised_[edge.enterprise], edge.amount);
}

std::optional<Money> CascadeEvaluator::shortfall(EdgeId e) const {
  const Edge& edge = net_->edge(e);
  if (state_.defaulted[edge.investor]) return std::nullopt;
  Money gap = edge.amount - enterprise_return(e);
  if (gap < 0) gap = 0;
  return gap;
}

InvestState default_determination(const InvestmentNetwork& net, const EdgeSet& cooperate) {
  CascadeEvaluator evaluator(net);
  return evaluator.run(cooperate);
}

Money enterprise_return(const InvestmentNetwork& net, const EdgeSet& invest, EdgeId e) {
  if (!invest.contains(e)) {
    throw std::invalid_argument("edge " + net.edge_label(e) +
                                " is not an invest edge; its return is undefined");
  }
  const VertexId k = net.edge(e).enterprise;
  Money invested = 0;
  for (EdgeId f : net.out_edges(k)) {
    if (invest.contains(f)) invested += net.amount(f);
  }
  return proportional_return(net, k, invested, net.amount(e));
}

Money edge_utility(const InvestmentNetwork& net, const CollateralMatrix& c,
                   const EdgeSet& cooperate, const InvestState& state, EdgeId e) {
  const Edge& edge = net.edge(e);
  if (!cooperate.contains(e)) return edge.amount;
  if (state.is_defaulted(edge.investor)) return 0;
  Money r = enterprise_return(net, state.invest, e);
  if (r > edge.amount) return r;
  r += c[e];
  return r < edge.amount ? r : edge.amount;
}

Money edge_utility(const InvestmentNetwork& net, const CollateralMatrix& c,
                   const EdgeSet& cooperate, EdgeId e) {
  return edge_utility(net, c, cooperate, default_determination(net, cooperate), e);
}

Money player_utility(const InvestmentNetwork& net, const CollateralMatrix& c,
                     const EdgeSet& cooperate, VertexId player) {
  const InvestState state = default_determination(net, cooperate);
  Money total = 0;
  for (EdgeId e : net.in_edges(player)) total += edge_utility(net, c, cooperate, state, e);
  return total;
}

Action best_response(const InvestmentNetwork& net, const CollateralMatrix& c,
                     const EdgeSet& cooperate, EdgeId e) {
  const EdgeSet with_e = cooperate.with(e);
  const InvestState state = default_determination(net, with_e);
  if (state.is_defaulted(net.edge(e).investor)) return Action::kDefect;
  return edge_utility(net, c, with_e, state, e) >= net.amount(e) ? Action::kCooperate
                                                                  : Action::kDefect;
}

bool is_nash_equilibrium(const InvestmentNetwork& net, const CollateralMatrix& c,
                         const EdgeSet& cooperate) {
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    const Action chosen = cooperate.contains(e) ? Action::kCooperate : Action::kDefect;
    if (best_response(net, c, cooperate, e) != chosen) return false;
  }
  return true;
}

}  // namespace collat
