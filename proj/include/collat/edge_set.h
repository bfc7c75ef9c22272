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

#ifndef COLLAT_EDGE_SET_H_
#define COLLAT_EDGE_SET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace collat {

using VertexId = std::size_t;
using EdgeId = std::size_t;

// Subset of a network's edge list, stored as a bitset over edge indices.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static EdgeSet full(std::size_t universe) {
    EdgeSet set(universe);
    for (EdgeId e = 0; e < universe; ++e) set.insert(e);
    return set;
  }

  // Bit e of `mask` selects edge e. Requires universe <= 64.
  static EdgeSet from_mask(std::size_t universe, std::uint64_t mask) {
    EdgeSet set(universe);
    if (!set.words_.empty()) set.words_[0] = mask & low_bits(universe);
    return set;
  }

  std::size_t universe() const { return universe_; }

  bool contains(EdgeId e) const {
    return e < universe_ && ((words_[e / 64] >> (e % 64)) & 1u) != 0;
  }
  void insert(EdgeId e) { words_[e / 64] |= std::uint64_t{1} << (e % 64); }
  void erase(EdgeId e) { words_[e / 64] &= ~(std::uint64_t{1} << (e % 64)); }

  std::size_t count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const { return count() == 0; }

  bool is_subset_of(const EdgeSet& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      const std::uint64_t theirs = w < other.words_.size() ? other.words_[w] : 0;
      if ((words_[w] & ~theirs) != 0) return false;
    }
    return true;
  }

  EdgeSet with(EdgeId e) const {
    EdgeSet copy = *this;
    copy.insert(e);
    return copy;
  }

  std::vector<EdgeId> elements() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < universe_; ++e) {
      if (contains(e)) out.push_back(e);
    }
    return out;
  }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  static std::uint64_t low_bits(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace collat

#endif  // COLLAT_EDGE_SET_H_
