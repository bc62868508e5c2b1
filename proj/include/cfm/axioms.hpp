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

// Validation of cyclic-flat presentations.
//
// A family Z of subsets with integer ranks is the family of cyclic flats of
// a matroid (with those ranks) iff
//   Z0  Z is a lattice under inclusion;
//   Z1  the least member has rank 0;
//   Z2  0 < r(Y) - r(X) < |Y - X| whenever X is a proper subset of Y;
//   Z3  r(X) + r(Y) >= r(X v Y) + r(X ^ Y) + |(X n Y) - (X ^ Y)| for every
//       incomparable pair.
// The checker reports every violation, not just the first one.

#ifndef CFM_AXIOMS_HPP_
#define CFM_AXIOMS_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cfm/element_set.hpp"
#include "cfm/presentation.hpp"

namespace cfm {

enum class Axiom { Duplicate, Z0, Z1, Z2, Z3 };

inline const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Duplicate: return "Duplicate";
    case Axiom::Z0: return "Z0";
    case Axiom::Z1: return "Z1";
    case Axiom::Z2: return "Z2";
    case Axiom::Z3: return "Z3";
  }
  return "?";
}

struct AxiomViolation {
  Axiom axiom;
  Mask x = 0;
  std::optional<Mask> y;
  std::string detail;

  friend bool operator<(const AxiomViolation& a, const AxiomViolation& b) {
    return std::tuple(a.axiom, a.x, a.y.value_or(0)) < std::tuple(b.axiom, b.x, b.y.value_or(0));
  }
};

/// Thrown by Matroid::from_presentation for presentations that fail validation.
class axiom_error : public usage_error {
 public:
  axiom_error(const std::string& what, std::vector<AxiomViolation> v)
      : usage_error(what), violations_(std::move(v)) {}
  const std::vector<AxiomViolation>& violations() const { return violations_; }

 private:
  std::vector<AxiomViolation> violations_;
};

namespace detail {

// Lattice operations on a duplicate-free list of sets. Both return nullopt
// when the bound does not exist.
inline std::optional<Mask> join_in(const std::vector<Mask>& sets, Mask x, Mask y) {
  const Mask u = x | y;
  Mask inter = ~Mask{0};
  bool any = false;
  for (Mask s : sets) {
    if (is_subset(u, s)) {
      inter &= s;
      any = true;
    }
  }
  if (!any || !std::binary_search(sets.begin(), sets.end(), inter)) return std::nullopt;
  return inter;
}

inline std::optional<Mask> meet_in(const std::vector<Mask>& sets, Mask x, Mask y) {
  const Mask i = x & y;
  Mask uni = 0;
  bool any = false;
  for (Mask s : sets) {
    if (is_subset(s, i)) {
      uni |= s;
      any = true;
    }
  }
  if (!any || !std::binary_search(sets.begin(), sets.end(), uni)) return std::nullopt;
  return uni;
}

}  // namespace detail

/// Empty result means the presentation is valid. Violations are sorted by
/// axiom, then by witness sets. Negative ranks are rejected up front.
inline std::vector<AxiomViolation> check_z_axioms(const CyclicFlatPresentation& p) {
  const GroundSet& g = p.ground();
  std::vector<AxiomViolation> out;
  std::vector<Mask> sets;
  std::vector<int> ranks;
  for (const auto& z : p.flats()) {
    if (z.rank < 0) {
      throw usage_error("negative rank " + std::to_string(z.rank) + " for " + g.format(z.set));
    }
    if (!sets.empty() && sets.back() == z.set) {
      out.push_back({Axiom::Duplicate, z.set, std::nullopt,
                     "set " + g.format(z.set) + " listed more than once"});
      continue;
    }
    sets.push_back(z.set);
    ranks.push_back(z.rank);
  }
  if (sets.empty()) {
    out.push_back({Axiom::Z0, 0, std::nullopt, "empty collection has no least element"});
    return out;
  }
  auto rank_of = [&](Mask s) {
    return ranks[static_cast<std::size_t>(std::lower_bound(sets.begin(), sets.end(), s) - sets.begin())];
  };

  const std::size_t k = sets.size();
  bool lattice = true;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Mask x = sets[i], y = sets[j];
      if (is_subset(x, y) || is_subset(y, x)) continue;
      const bool has_join = detail::join_in(sets, x, y).has_value();
      const bool has_meet = detail::meet_in(sets, x, y).has_value();
      if (!has_join || !has_meet) {
        lattice = false;
        std::string what = !has_join && !has_meet ? "neither a join nor a meet"
                           : !has_join            ? "no least upper bound"
                                                  : "no greatest lower bound";
        out.push_back({Axiom::Z0, x, y, g.format(x) + " and " + g.format(y) + " have " + what});
      }
    }
  }

  if (lattice) {
    Mask least = sets.front();
    for (Mask s : sets) least &= s;
    if (std::binary_search(sets.begin(), sets.end(), least) && rank_of(least) != 0) {
      out.push_back({Axiom::Z1, least, std::nullopt,
                     "least member " + g.format(least) + " has rank " +
                         std::to_string(rank_of(least)) + ", expected 0"});
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Mask x = sets[i], y = sets[j];
      if (i == j || !is_subset(x, y)) continue;
      const int d = ranks[j] - ranks[i];
      const int gap = popcount(y & ~x);
      if (d <= 0 || d >= gap) {
        out.push_back({Axiom::Z2, x, y,
                       "X=" + g.format(x) + " ⊊ Y=" + g.format(y) + ": r(Y)-r(X)=" +
                           std::to_string(d) + " but need 0 < r(Y)-r(X) < |Y-X|=" +
                           std::to_string(gap)});
      }
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const Mask x = sets[i], y = sets[j];
      if (is_subset(x, y) || is_subset(y, x)) continue;
      auto jn = detail::join_in(sets, x, y);
      auto mt = detail::meet_in(sets, x, y);
      if (!jn || !mt) continue;  // already a Z0 violation
      const int lhs = ranks[i] + ranks[j];
      const int rhs = rank_of(*jn) + rank_of(*mt) + popcount((x & y) & ~*mt);
      if (lhs < rhs) {
        out.push_back({Axiom::Z3, x, y,
                       "X=" + g.format(x) + ", Y=" + g.format(y) + ": r(X)+r(Y)=" +
                           std::to_string(lhs) + " < r(X v Y)+r(X ^ Y)+|(X n Y)-(X ^ Y)|=" +
                           std::to_string(rhs)});
      }
    }
  }

  std::stable_sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline std::vector<Mask> member_sets(const CyclicFlatPresentation& p, Mask x, Mask y) {
  std::vector<Mask> sets;
  for (const auto& z : p.flats()) {
    if (sets.empty() || sets.back() != z.set) sets.push_back(z.set);
  }
  if (!std::binary_search(sets.begin(), sets.end(), x) ||
      !std::binary_search(sets.begin(), sets.end(), y)) {
    throw usage_error("lattice operation on a set that is not a listed cyclic flat");
  }
  return sets;
}

}  // namespace detail

/// Least member containing x and y.
inline Mask lattice_join(const CyclicFlatPresentation& p, Mask x, Mask y) {
  auto j = detail::join_in(detail::member_sets(p, x, y), x, y);
  if (!j) throw usage_error("presentation is not a lattice: no join");
  return *j;
}

/// Greatest member contained in x and y.
inline Mask lattice_meet(const CyclicFlatPresentation& p, Mask x, Mask y) {
  auto m = detail::meet_in(detail::member_sets(p, x, y), x, y);
  if (!m) throw usage_error("presentation is not a lattice: no meet");
  return *m;
}

inline ElementSet lattice_join(const CyclicFlatPresentation& p, const ElementSet& x,
                               const ElementSet& y) {
  x.check(y);
  if (!same_universe(x.universe(), p.ground_ptr())) throw usage_error("ground set mismatch");
  return {p.ground_ptr(), lattice_join(p, x.bits(), y.bits())};
}

inline ElementSet lattice_meet(const CyclicFlatPresentation& p, const ElementSet& x,
                               const ElementSet& y) {
  x.check(y);
  if (!same_universe(x.universe(), p.ground_ptr())) throw usage_error("ground set mismatch");
  return {p.ground_ptr(), lattice_meet(p, x.bits(), y.bits())};
}

}  // namespace cfm

#endif  // CFM_AXIOMS_HPP_
