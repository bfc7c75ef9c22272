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

#include "collat/network.h"

#include <set>
#include <stdexcept>
#include <utility>

namespace collat {

InvestmentNetwork::InvestmentNetwork(std::size_t num_vertices) {
  for (std::size_t v = 0; v < num_vertices; ++v) add_vertex();
}

VertexId InvestmentNetwork::add_vertex(std::string name) {
  const VertexId id = costs_.size();
  costs_.emplace_back(0);
  rates_.emplace_back(0);
  names_.push_back(name.empty() ? std::to_string(id) : std::move(name));
  out_edges_.emplace_back();
  in_edges_.emplace_back();
  return id;
}

void InvestmentNetwork::check_vertex(VertexId v) const {
  if (v >= num_vertices()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n = " +
                            std::to_string(num_vertices()) + ")");
  }
}

EdgeId InvestmentNetwork::add_edge(VertexId enterprise, VertexId investor, Money amount) {
  check_vertex(enterprise);
  check_vertex(investor);
  const EdgeId id = edges_.size();
  edges_.push_back(Edge{enterprise, investor, std::move(amount)});
  out_edges_[enterprise].push_back(id);
  in_edges_[investor].push_back(id);
  return id;
}

void InvestmentNetwork::set_cost(VertexId v, Money cost) {
  check_vertex(v);
  costs_[v] = std::move(cost);
}

void InvestmentNetwork::set_rate(VertexId v, Rational rate) {
  check_vertex(v);
  rates_[v] = std::move(rate);
}

void InvestmentNetwork::set_name(VertexId v, std::string name) {
  check_vertex(v);
  names_[v] = std::move(name);
}

std::vector<VertexId> InvestmentNetwork::enterprises() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < num_vertices(); ++v) {
    if (is_enterprise(v)) out.push_back(v);
  }
  return out;
}

Money InvestmentNetwork::total_opportunity(VertexId k) const {
  Money sum = 0;
  for (EdgeId e : out_edges_[k]) sum += edges_[e].amount;
  return sum;
}

std::optional<EdgeId> InvestmentNetwork::find_edge(VertexId enterprise,
                                                   VertexId investor) const {
  if (enterprise >= num_vertices()) return std::nullopt;
  for (EdgeId e : out_edges_[enterprise]) {
    if (edges_[e].investor == investor) return e;
  }
  return std::nullopt;
}

std::optional<VertexId> InvestmentNetwork::find_vertex(std::string_view name) const {
  for (VertexId v = 0; v < num_vertices(); ++v) {
    if (names_[v] == name) return v;
  }
  return std::nullopt;
}

std::string InvestmentNetwork::edge_label(EdgeId e) const {
  return "(" + names_[edges_[e].enterprise] + "," + names_[edges_[e].investor] + ")";
}

CollateralMatrix::CollateralMatrix(const InvestmentNetwork& net)
    : values_(net.num_edges(), Money(0)) {
  caps_.reserve(net.num_edges());
  for (const Edge& edge : net.edges()) caps_.push_back(edge.amount);
}

CollateralMatrix CollateralMatrix::full(const InvestmentNetwork& net) {
  CollateralMatrix c(net);
  c.values_ = c.caps_;
  return c;
}

void CollateralMatrix::set(EdgeId e, const Money& amount) {
  if (amount < 0) {
    throw std::invalid_argument("negative collateral on edge " + std::to_string(e));
  }
  values_[e] = amount < caps_[e] ? amount : caps_[e];
}

Money CollateralMatrix::total() const {
  Money sum = 0;
  for (const Money& v : values_) sum += v;
  return sum;
}

ValidationReport validate_network(const InvestmentNetwork& net) {
  ValidationReport report;
  auto add = [&](Violation::Kind kind, std::optional<VertexId> v, std::optional<EdgeId> e,
                 std::string message) {
    report.violations.push_back(Violation{kind, v, e, std::move(message)});
  };

  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    const Edge& edge = net.edge(e);
    if (edge.amount <= 0) {
      add(Violation::Kind::kNonPositiveAmount, std::nullopt, e,
          "non-positive edge weight " + to_string(edge.amount) + " on edge " +
              net.edge_label(e));
    }
    if (edge.enterprise == edge.investor) {
      add(Violation::Kind::kSelfEdge, edge.enterprise, e,
          "self edge " + net.edge_label(e) + ": an agent cannot invest in its own enterprise");
    }
    if (!seen.emplace(edge.enterprise, edge.investor).second) {
      add(Violation::Kind::kDuplicateEdge, std::nullopt, e,
          "duplicate edge " + net.edge_label(e));
    }
  }

  for (VertexId k : net.enterprises()) {
    const Money& z = net.cost(k);
    const Rational& alpha = net.rate(k);
    if (z < 0) {
      add(Violation::Kind::kNegativeCost, k, std::nullopt,
          "enterprise " + net.name(k) + " has negative cost " + to_string(z));
    }
    if (alpha <= 0) {
      add(Violation::Kind::kNonPositiveRate, k, std::nullopt,
          "enterprise " + net.name(k) + " has non-positive rate " + to_string(alpha));
    }
    const Money x = net.total_opportunity(k);
    const Money pot = (1 + alpha) * (x - z);
    if (pot < x) {
      add(Violation::Kind::kUnprofitable, k, std::nullopt,
          "enterprise " + net.name(k) + " is unprofitable: (1+alpha)(X-Z) = " + to_string(pot) +
              " < X = " + to_string(x));
    }
  }
  return report;
}

}  // namespace collat
