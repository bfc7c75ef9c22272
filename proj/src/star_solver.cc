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

#include "collat/star_solver.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>

#include "collat/errors.h"

namespace collat {
namespace {

// Fraction of x that must be collateralized when the cumulative investment
// including this player is `prefix`: clamp(1 - (1 + a)(1 - Z / prefix), 0, 1).
Rational required_fraction(const StarInstance& star, const Money& prefix) {
  if (prefix <= 0) return 1;
  Rational f = 1 - (1 + star.rate) * (1 - star.cost / prefix);
  if (f < 0) return 0;
  if (f > 1) return 1;
  return f;
}

std::vector<std::size_t> descending_order(const StarInstance& star) {
  std::vector<std::size_t> order(star.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return star.investments[a] > star.investments[b];
  });
  return order;
}

// Lexicographic order on the ascending index lists of two subsets.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  while (a != 0 && b != 0) {
    const int ia = std::countr_zero(a);
    const int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

struct Candidate {
  std::uint64_t mask = 0;
  Money total;
  bool valid = false;

  bool better_than(const Candidate& other) const {
    if (!other.valid) return valid;
    if (!valid) return false;
    if (total != other.total) return total < other.total;
    return lex_less(mask, other.mask);
  }
};

Candidate best_in_range(const StarInstance& star, const std::vector<std::size_t>& desc,
                        std::uint64_t begin, std::uint64_t end) {
  Candidate best;
  Money prefix, total, frac;
  const Rational one_plus_rate = 1 + star.rate;
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    total = 0;
    for (std::size_t i = 0; i < star.size(); ++i) {
      if ((mask >> i) & 1u) total += star.investments[i];
    }
    if (best.valid && total > best.total) continue;
    prefix = total;
    for (std::size_t i : desc) {
      if ((mask >> i) & 1u) continue;
      prefix += star.investments[i];
      frac = 1 - one_plus_rate * (1 - star.cost / prefix);
      // Later players see a larger prefix, so their fraction is no larger.
      if (frac <= 0) break;
      if (frac >= 1) {
        total += star.investments[i];
      } else {
        total += star.investments[i] * frac;
      }
      if (best.valid && total > best.total) break;
    }
    Candidate candidate{mask, total, true};
    if (candidate.better_than(best)) best = std::move(candidate);
  }
  return best;
}

StarSolution make_solution(const StarInstance& star, std::vector<Money> collateral,
                           std::vector<std::size_t> order) {
  StarSolution solution;
  solution.total = 0;
  for (std::size_t i = 0; i < star.size(); ++i) {
    solution.total += collateral[i];
    if (collateral[i] == star.investments[i]) solution.full_set.push_back(i);
  }
  solution.collateral = std::move(collateral);
  solution.order = std::move(order);
  return solution;
}

}  // namespace

Money StarInstance::total() const {
  Money sum = 0;
  for (const Money& x : investments) sum += x;
  return sum;
}

bool StarInstance::is_profitable() const {
  const Money x = total();
  return (1 + rate) * (x - cost) >= x;
}

std::vector<Money> minimal_vector_for_order(const StarInstance& star,
                                            std::span<const std::size_t> order) {
  if (order.size() != star.size()) {
    throw std::invalid_argument("order length does not match the number of players");
  }
  std::vector<bool> seen(star.size(), false);
  for (std::size_t i : order) {
    if (i >= star.size() || seen[i]) {
      throw std::invalid_argument("order is not a permutation of the players");
    }
    seen[i] = true;
  }
  std::vector<Money> c(star.size(), Money(0));
  Money prefix = 0;
  for (std::size_t i : order) {
    prefix += star.investments[i];
    c[i] = star.investments[i] * required_fraction(star, prefix);
  }
  return c;
}

std::vector<Money> optimal_partial_for_set(const StarInstance& star,
                                           std::span<const std::size_t> full_set) {
  std::vector<bool> in_set(star.size(), false);
  for (std::size_t i : full_set) {
    if (i >= star.size()) throw std::invalid_argument("player index out of range");
    in_set[i] = true;
  }
  std::vector<Money> c(star.size(), Money(0));
  Money prefix = 0;
  for (std::size_t i = 0; i < star.size(); ++i) {
    if (in_set[i]) {
      c[i] = star.investments[i];
      prefix += star.investments[i];
    }
  }
  for (std::size_t i : descending_order(star)) {
    if (in_set[i]) continue;
    prefix += star.investments[i];
    c[i] = star.investments[i] * required_fraction(star, prefix);
  }
  return c;
}

StarSolution solve_star(const StarInstance& star, unsigned jobs) {
  const std::size_t d = star.size();
  if (d > kMaxStarSubsetPlayers) {
    throw TooLargeError("star with " + std::to_string(d) + " investors exceeds the subset guard of " +
                        std::to_string(kMaxStarSubsetPlayers));
  }
  const std::vector<std::size_t> desc = descending_order(star);
  const std::uint64_t num_masks = std::uint64_t{1} << d;

  Candidate best;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(jobs, 1u), num_masks));
  if (workers <= 1 || d < 10) {
    best = best_in_range(star, desc, 0, num_masks);
  } else {
    std::vector<Candidate> partial(workers);
    {
      std::vector<std::jthread> threads;
      const std::uint64_t chunk = (num_masks + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = std::min(num_masks, lo + chunk);
        threads.emplace_back([&, w, lo, hi] { partial[w] = best_in_range(star, desc, lo, hi); });
      }
    }
    for (Candidate& c : partial) {
      if (c.better_than(best)) best = std::move(c);
    }
  }

  std::vector<std::size_t> full_set;
  for (std::size_t i = 0; i < d; ++i) {
    if ((best.mask >> i) & 1u) full_set.push_back(i);
  }
  std::vector<std::size_t> order = full_set;
  for (std::size_t i : desc) {
    if (!((best.mask >> i) & 1u)) order.push_back(i);
  }
  return make_solution(star, optimal_partial_for_set(star, full_set), std::move(order));
}

StarSolution brute_force_star(const StarInstance& star) {
  const std::size_t d = star.size();
  if (d > kMaxStarPermutationPlayers) {
    throw TooLargeError("brute force over " + std::to_string(d) +
                        "! orders exceeds the permutation guard of " +
                        std::to_string(kMaxStarPermutationPlayers));
  }
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::optional<StarSolution> best;
  do {
    StarSolution candidate = make_solution(star, minimal_vector_for_order(star, order), order);
    if (!best || candidate.total < best->total) best = std::move(candidate);
  } while (std::next_permutation(order.begin(), order.end()));
  return std::move(*best);
}

InvestmentNetwork star_network(const StarInstance& star) {
  InvestmentNetwork net;
  const VertexId center = net.add_vertex("E");
  net.set_cost(center, star.cost);
  net.set_rate(center, star.rate);
  for (std::size_t i = 0; i < star.size(); ++i) {
    const VertexId v = net.add_vertex("p" + std::to_string(i + 1));
    net.add_edge(center, v, star.investments[i]);
  }
  return net;
}

}  // namespace collat
