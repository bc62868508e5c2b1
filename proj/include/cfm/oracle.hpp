// Copyright 2026 The Authors.
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

// Algorithms that need nothing but a rank function on bitmasks. Everything
// here is parameterised on the oracle so the same code materialises
// matroids given by presentations, matrices, extension rules and minors.

#ifndef CFM_ORACLE_HPP_
#define CFM_ORACLE_HPP_

#include <algorithm>
#include <concepts>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cfm/element_set.hpp"
#include "cfm/presentation.hpp"

namespace cfm {

template <class R>
concept RankOracle = requires(const R& r, Mask m) {
  { r(m) } -> std::convertible_to<int>;
};

template <RankOracle R>
Mask closure_in(const R& rank, Mask universe, Mask x) {
  const int rx = rank(x);
  Mask cl = x;
  for_each_bit(universe & ~x, [&](std::size_t i) {
    if (rank(x | bit(i)) == rx) cl |= bit(i);
  });
  return cl;
}

/// x is a union of circuits iff removing any single member keeps the rank.
template <RankOracle R>
bool is_cyclic_in(const R& rank, Mask x) {
  const int rx = rank(x);
  bool cyclic = true;
  for_each_bit(x, [&](std::size_t i) {
    if (cyclic && rank(x & ~bit(i)) != rx) cyclic = false;
  });
  return cyclic;
}

/// All flats inside `universe`, grouped by rank and sorted by mask value.
/// Flats of rank k+1 are generated as covers cl(F + e) of rank-k flats;
/// the covers of F partition universe - F, which lets us skip elements.
template <RankOracle R>
std::vector<std::vector<Mask>> flats_by_rank(const R& rank, Mask universe) {
  std::vector<std::vector<Mask>> levels;
  levels.push_back({closure_in(rank, universe, 0)});
  while (true) {
    std::unordered_set<Mask> next;
    for (Mask f : levels.back()) {
      Mask rest = universe & ~f;
      while (rest != 0) {
        const Mask e = rest & (~rest + 1);
        const Mask g = closure_in(rank, universe, f | e);
        rest &= ~g;
        next.insert(g);
      }
    }
    if (next.empty()) break;
    std::vector<Mask> level(next.begin(), next.end());
    std::sort(level.begin(), level.end());
    levels.push_back(std::move(level));
  }
  return levels;
}

/// Cyclic flats with their ranks, sorted by set.
template <RankOracle R>
std::vector<CyclicFlat> cyclic_flats_in(const R& rank, Mask universe) {
  std::vector<CyclicFlat> out;
  for (const auto& level : flats_by_rank(rank, universe)) {
    for (Mask f : level) {
      if (is_cyclic_in(rank, f)) out.push_back({f, rank(f)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CyclicFlat& a, const CyclicFlat& b) { return a.set < b.set; });
  return out;
}

/// Wraps an oracle with a per-instance cache. Not thread-safe; meant for
/// the duration of a single materialisation.
template <RankOracle R>
class CachedOracle {
 public:
  explicit CachedOracle(const R& rank) : rank_(rank) {}
  int operator()(Mask x) const {
    auto it = cache_.find(x);
    if (it != cache_.end()) return it->second;
    const int v = rank_(x);
    cache_.emplace(x, v);
    return v;
  }

 private:
  const R& rank_;
  mutable std::unordered_map<Mask, int> cache_;
};

/// Exhaustive check of r(0) = 0, unit increase, monotonicity and local
/// submodularity over every subset of an n-element ground set. Returns a
/// description of the first failure, or nullopt. Intended for n <= 20.
template <RankOracle R>
std::optional<std::string> rank_axiom_failure(const R& rank, std::size_t n) {
  if (n > 24) throw usage_error("exhaustive rank-axiom check limited to 24 elements");
  const Mask top = full_mask(n);
  std::vector<int> r(std::size_t{1} << n);
  for (Mask x = 0; x <= top; ++x) r[x] = rank(x);
  if (r[0] != 0) return "r(empty) = " + std::to_string(r[0]);
  for (Mask x = 0; x <= top; ++x) {
    for (std::size_t e = 0; e < n; ++e) {
      if (x & bit(e)) continue;
      const int d = r[x | bit(e)] - r[x];
      if (d < 0 || d > 1) {
        return "unit increase fails at X=" + std::to_string(x) + ", e=" + std::to_string(e);
      }
      for (std::size_t f = e + 1; f < n; ++f) {
        if (x & bit(f)) continue;
        if (r[x | bit(e)] + r[x | bit(f)] < r[x | bit(e) | bit(f)] + r[x]) {
          return "submodularity fails at X=" + std::to_string(x) + ", e=" + std::to_string(e) +
                 ", f=" + std::to_string(f);
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace cfm

#endif  // CFM_ORACLE_HPP_
