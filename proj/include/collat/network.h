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

#ifndef COLLAT_NETWORK_H_
#define COLLAT_NETWORK_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "collat/edge_set.h"
#include "collat/rational.h"

namespace collat {

// Investment opportunity: `investor` may invest `amount` in the enterprise of
// `enterprise`. Edges point from the enterprise to the investor.
struct Edge {
  VertexId enterprise;
  VertexId investor;
  Money amount;
};

// Directed investment network with per-vertex operational cost and return
// rate. Vertices with at least one outgoing edge are enterprise vertices.
//
// The container does not enforce the model's invariants (positive amounts,
// no duplicates, profitability); validate_network() reports violations so
// that malformed inputs can be diagnosed rather than rejected blindly.
class InvestmentNetwork {
 public:
  InvestmentNetwork() = default;
  explicit InvestmentNetwork(std::size_t num_vertices);

  VertexId add_vertex(std::string name = {});
  EdgeId add_edge(VertexId enterprise, VertexId investor, Money amount);
  void set_cost(VertexId v, Money cost);
  void set_rate(VertexId v, Rational rate);
  void set_name(VertexId v, std::string name);

  std::size_t num_vertices() const { return costs_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  const Money& amount(EdgeId e) const { return edges_[e].amount; }

  const Money& cost(VertexId v) const { return costs_[v]; }
  const Rational& rate(VertexId v) const { return rates_[v]; }
  const std::string& name(VertexId v) const { return names_[v]; }

  // Edges whose enterprise is v (v's investors).
  std::span<const EdgeId> out_edges(VertexId v) const { return out_edges_[v]; }
  // Edges whose investor is v (v's own investment opportunities).
  std::span<const EdgeId> in_edges(VertexId v) const { return in_edges_[v]; }

  bool is_enterprise(VertexId v) const { return !out_edges_[v].empty(); }
  std::vector<VertexId> enterprises() const;

  // X_k: total investment opportunity in k's enterprise.
  Money total_opportunity(VertexId k) const;

  std::optional<EdgeId> find_edge(VertexId enterprise, VertexId investor) const;
  std::optional<VertexId> find_vertex(std::string_view name) const;

  // Free-form string metadata; generators record their parameters here.
  std::map<std::string, std::string>& meta() { return meta_; }
  const std::map<std::string, std::string>& meta() const { return meta_; }

  std::string edge_label(EdgeId e) const;

 private:
  void check_vertex(VertexId v) const;

  std::vector<Edge> edges_;
  std::vector<Money> costs_;
  std::vector<Rational> rates_;
  std::vector<std::string> names_;
  std::vector<std::vector<EdgeId>> out_edges_;
  std::vector<std::vector<EdgeId>> in_edges_;
  std::map<std::string, std::string> meta_;
};

// Per-edge collaterals, normalized so that 0 <= c_e <= x_e. Amounts above the
// investment never change a payoff and are capped on entry.
class CollateralMatrix {
 public:
  CollateralMatrix() = default;
  explicit CollateralMatrix(const InvestmentNetwork& net);

  static CollateralMatrix zero(const InvestmentNetwork& net) { return CollateralMatrix(net); }
  static CollateralMatrix full(const InvestmentNetwork& net);

  // Throws std::invalid_argument for negative amounts.
  void set(EdgeId e, const Money& amount);
  const Money& operator[](EdgeId e) const { return values_[e]; }
  std::size_t size() const { return values_.size(); }
  std::span<const Money> values() const { return values_; }
  bool is_full(EdgeId e) const { return values_[e] == caps_[e]; }

  Money total() const;

  friend bool operator==(const CollateralMatrix& a, const CollateralMatrix& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<Money> caps_;
  std::vector<Money> values_;
};

struct Violation {
  enum class Kind {
    kNonPositiveAmount,
    kSelfEdge,
    kDuplicateEdge,
    kNegativeCost,
    kNonPositiveRate,
    kUnprofitable,
  };
  Kind kind;
  std::optional<VertexId> vertex;
  std::optional<EdgeId> edge;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Structural invariants plus profitability, (1 + a_k)(X_k - Z_k) >= X_k for
// every enterprise. Never throws; lists every violation.
ValidationReport validate_network(const InvestmentNetwork& net);

}  // namespace collat

#endif  // COLLAT_NETWORK_H_
