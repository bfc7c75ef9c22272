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

#include "collat/instances.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "collat/errors.h"

namespace collat {
namespace {

// Modulo reduction keeps the stream identical across standard libraries,
// which std::uniform_int_distribution does not promise.
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

void add_spike(InvestmentNetwork& net, VertexId enterprise, const std::string& name,
               const Money& amount) {
  const VertexId spike = net.add_vertex(name);
  net.add_edge(enterprise, spike, amount);
}

void check_range(std::int64_t lo, std::int64_t hi) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("weight range must satisfy 1 <= min <= max");
}

// Cost strictly between 0 and X and a rate that leaves the enterprise
// profitable; in large-alpha mode integer Z in [1, X) and alpha in (Z, 2Z+1].
void price_enterprise(PortableRng& rng, const Money& x, bool large_alpha, Money& z, Rational& a) {
  if (large_alpha) {
    const unsigned long total = x.get_num().get_ui();
    z = total >= 2 ? Money(mpz_class(1 + rng.below(total - 1))) : Money(0);
    a = z + 1 + Rational(mpz_class(rng.below(z.get_num().get_ui() + 1)));
    return;
  }
  z = x * ratio(rng.between(1, 3), 4);
  // Smallest profitable rate is Z / (X - Z); add a margin of 0, 1/2, ... 2.
  a = z / (x - z) + ratio(rng.between(0, 4), 2);
  if (a <= 0) a = ratio(1, 2);
}

}  // namespace

InvestmentNetwork gen_cycle_family(int k) {
  if (k < 3) throw std::invalid_argument("cycle family needs k >= 3, got " + std::to_string(k));
  InvestmentNetwork net;
  const char* names[] = {"A", "B", "C"};
  for (const char* name : names) {
    const VertexId v = net.add_vertex(name);
    net.set_cost(v, k + 1);
    net.set_rate(v, 2 * k);
  }
  for (VertexId v = 0; v < 3; ++v) net.add_edge(v, (v + 1) % 3, 1);
  const char* spikes[] = {"a", "b", "c"};
  for (VertexId v = 0; v < 3; ++v) {
    add_spike(net, v, std::string(spikes[v]) + "1", 1);
    add_spike(net, v, std::string(spikes[v]) + "2", k);
  }
  net.meta()["generator"] = "cycle";
  net.meta()["k"] = std::to_string(k);
  return net;
}

InvestmentNetwork gen_fvs_gadget(const DirectedGraph& g) {
  const std::size_t n = g.num_vertices;
  std::vector<std::size_t> out_degree(n, 0);
  std::vector<std::vector<std::size_t>> preds(n);
  for (const auto& [u, v] : g.arcs) {
    if (u >= n || v >= n) throw std::out_of_range("arc endpoint out of range");
    ++out_degree[u];
    preds[v].push_back(u);
  }
  const std::size_t max_degree =
      n == 0 ? 0 : *std::max_element(out_degree.begin(), out_degree.end());
  const int k = static_cast<int>(1 + max_degree);

  std::vector<bool> alive(n, true);
  std::vector<std::size_t> remaining = out_degree;
  std::vector<std::size_t> dead_ends;
  for (std::size_t v = 0; v < n; ++v) {
    if (remaining[v] == 0) dead_ends.push_back(v);
  }
  while (!dead_ends.empty()) {
    const std::size_t v = dead_ends.back();
    dead_ends.pop_back();
    alive[v] = false;
    for (std::size_t u : preds[v]) {
      if (alive[u] && --remaining[u] == 0) dead_ends.push_back(u);
    }
  }

  InvestmentNetwork net;
  std::vector<VertexId> id(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    id[v] = net.add_vertex("g" + std::to_string(v));
    net.set_cost(id[v], k + 1);
    net.set_rate(id[v], 2 * k);
  }
  for (const auto& [u, v] : g.arcs) {
    if (alive[u] && alive[v] && !net.find_edge(id[u], id[v])) net.add_edge(id[u], id[v], 1);
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    add_spike(net, id[v], "g" + std::to_string(v) + "s1", 1);
    add_spike(net, id[v], "g" + std::to_string(v) + "s" + std::to_string(k), k);
  }
  net.meta()["generator"] = "fvs";
  net.meta()["k"] = std::to_string(k);
  return net;
}

StarInstance gen_knapsack_star(std::span<const std::int64_t> xs, std::int64_t t) {
  if (xs.empty()) throw std::invalid_argument("knapsack star needs at least one item");
  std::int64_t sum = 0;
  std::int64_t largest = 0;
  for (std::int64_t x : xs) {
    if (x <= 0) throw std::invalid_argument("knapsack items must be positive");
    sum += x;
    largest = std::max(largest, x);
  }
  if (t < 0 || t > sum - largest) {
    throw std::invalid_argument("knapsack threshold must satisfy 0 <= t <= sum - max = " +
                                std::to_string(sum - largest) + ", got " + std::to_string(t));
  }
  StarInstance star;
  for (std::int64_t x : xs) star.investments.emplace_back(static_cast<long>(x));
  const std::int64_t extra = largest + 1;
  star.investments.emplace_back(static_cast<long>(extra));
  star.cost = static_cast<long>(extra + t);
  star.rate = 2 * star.cost;
  return star;
}

std::optional<std::vector<std::size_t>> inverse_knapsack_brute(std::span<const std::int64_t> xs,
                                                               std::int64_t t) {
  if (xs.size() > 20) throw TooLargeError("inverse knapsack enumeration supports at most 20 items");
  std::optional<std::uint32_t> best;
  std::int64_t best_sum = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << xs.size()); ++mask) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if ((mask >> i) & 1u) sum += xs[i];
    }
    if (sum > t && (!best || sum < best_sum)) {
      best = mask;
      best_sum = sum;
    }
  }
  if (!best) return std::nullopt;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if ((*best >> i) & 1u) out.push_back(i);
  }
  return out;
}

InvestmentNetwork random_network(const RandomProfile& profile) {
  check_range(profile.weight_min, profile.weight_max);
  PortableRng rng(profile.seed);
  const std::size_t n = profile.num_vertices;
  InvestmentNetwork net;
  for (std::size_t v = 0; v < n; ++v) net.add_vertex("v" + std::to_string(v));

  // Acyclic networks only point forward in a random order.
  std::vector<VertexId> rank(n);
  std::iota(rank.begin(), rank.end(), VertexId{0});
  rng.shuffle(rank);
  std::vector<std::size_t> position(n);
  for (std::size_t p = 0; p < n; ++p) position[rank[p]] = p;

  for (VertexId k = 0; k < n; ++k) {
    std::vector<VertexId> candidates;
    for (VertexId i = 0; i < n; ++i) {
      if (i == k) continue;
      if (profile.acyclic && position[i] <= position[k]) continue;
      candidates.push_back(i);
    }
    rng.shuffle(candidates);
    const std::size_t degree = std::min<std::size_t>(
        candidates.size(), rng.below(profile.max_out_degree + 1));
    Money x = 0;
    for (std::size_t j = 0; j < degree; ++j) {
      const Money amount(static_cast<long>(rng.between(profile.weight_min, profile.weight_max)));
      net.add_edge(k, candidates[j], amount);
      x += amount;
    }
    if (degree == 0) continue;
    Money z;
    Rational a;
    price_enterprise(rng, x, profile.large_alpha, z, a);
    net.set_cost(k, z);
    net.set_rate(k, a);
  }
  net.meta()["generator"] = "random";
  net.meta()["seed"] = std::to_string(profile.seed);
  net.meta()["n"] = std::to_string(n);
  net.meta()["d"] = std::to_string(profile.max_out_degree);
  net.meta()["acyclic"] = profile.acyclic ? "true" : "false";
  if (profile.large_alpha) net.meta()["large_alpha"] = "true";
  return net;
}

StarInstance random_star(const RandomStarProfile& profile) {
  check_range(profile.weight_min, profile.weight_max);
  if (profile.min_players < 1 || profile.max_players < profile.min_players) {
    throw std::invalid_argument("player range must satisfy 1 <= min <= max");
  }
  PortableRng rng(profile.seed);
  StarInstance star;
  const auto d = static_cast<std::size_t>(rng.between(
      static_cast<std::int64_t>(profile.min_players), static_cast<std::int64_t>(profile.max_players)));
  for (std::size_t i = 0; i < d; ++i) {
    star.investments.emplace_back(static_cast<long>(rng.between(profile.weight_min, profile.weight_max)));
  }
  price_enterprise(rng, star.total(), profile.large_alpha, star.cost, star.rate);
  return star;
}

}  // namespace collat
