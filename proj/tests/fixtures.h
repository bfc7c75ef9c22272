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

// Small hand-built networks shared by the test suites.

#ifndef COLLAT_TESTS_FIXTURES_H_
#define COLLAT_TESTS_FIXTURES_H_

#include <cstdint>
#include <random>
#include <vector>

#include "collat/instances.h"
#include "collat/network.h"
#include "collat/star_solver.h"

namespace collat::testing {

inline StarInstance make_star(std::vector<Money> xs, Money z, Rational a) {
  StarInstance star;
  star.investments = std::move(xs);
  star.cost = std::move(z);
  star.rate = std::move(a);
  return star;
}

// P and Q invest in each other; s and t are spikes. Z = 2, a = 1 for both.
inline InvestmentNetwork mutual_pair() {
  InvestmentNetwork net;
  const VertexId p = net.add_vertex("P");
  const VertexId q = net.add_vertex("Q");
  const VertexId s = net.add_vertex("s");
  const VertexId t = net.add_vertex("t");
  net.add_edge(p, q, 1);
  net.add_edge(p, s, 1);
  net.add_edge(q, t, 1);
  net.add_edge(q, p, 1);
  for (VertexId v : {p, q}) {
    net.set_cost(v, 2);
    net.set_rate(v, 1);
  }
  return net;
}

// P <-> Q with edges of `amount`, Z = 1, optional unit spike into each.
inline InvestmentNetwork two_cycle(bool spikes, Rational rate = 1, Money amount = 1) {
  InvestmentNetwork net;
  const VertexId p = net.add_vertex("P");
  const VertexId q = net.add_vertex("Q");
  net.add_edge(p, q, amount);
  net.add_edge(q, p, amount);
  if (spikes) {
    net.add_edge(p, net.add_vertex("p1"), 1);
    net.add_edge(q, net.add_vertex("q1"), 1);
  }
  for (VertexId v : {p, q}) {
    net.set_cost(v, 1);
    net.set_rate(v, rate);
  }
  return net;
}

// Enterprise P (spikes 1, 1; Z = 1, a = 1) invests 2 in enterprise Q (plus a
// spike of 1; Z = 2, a = 1). Star optima 1 and 5/3.
inline InvestmentNetwork two_level_dag() {
  InvestmentNetwork net;
  const VertexId p = net.add_vertex("P");
  const VertexId q = net.add_vertex("Q");
  net.add_edge(p, net.add_vertex("s1"), 1);
  net.add_edge(p, net.add_vertex("s2"), 1);
  net.add_edge(q, p, 2);
  net.add_edge(q, net.add_vertex("t"), 1);
  net.set_cost(p, 1);
  net.set_rate(p, 1);
  net.set_cost(q, 2);
  net.set_rate(q, 1);
  return net;
}

inline std::vector<InvestmentNetwork> random_networks(int count, std::size_t n,
                                                      std::size_t max_degree, std::uint64_t base,
                                                      bool acyclic = false,
                                                      bool large_alpha = false) {
  std::vector<InvestmentNetwork> out;
  for (int i = 0; i < count; ++i) {
    RandomProfile profile;
    profile.num_vertices = n;
    profile.max_out_degree = max_degree;
    profile.acyclic = acyclic;
    profile.large_alpha = large_alpha;
    profile.seed = base + static_cast<std::uint64_t>(i);
    out.push_back(random_network(profile));
  }
  return out;
}

inline EdgeSet random_subset(std::size_t m, std::mt19937_64& rng) {
  EdgeSet s(m);
  for (EdgeId e = 0; e < m; ++e) {
    if (rng() & 1u) s.insert(e);
  }
  return s;
}

// Each coordinate a random multiple of x/4.
inline CollateralMatrix random_matrix(const InvestmentNetwork& net, std::mt19937_64& rng) {
  CollateralMatrix c = CollateralMatrix::zero(net);
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    c.set(e, net.amount(e) * ratio(rng() % 5, 4));
  }
  return c;
}

}  // namespace collat::testing

#endif  // COLLAT_TESTS_FIXTURES_H_
