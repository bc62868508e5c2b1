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

// Modular pairs, modular cuts and single-element extensions.
//
// A modular cut of M is a set of flats that is closed upwards and contains
// X n Y whenever it contains a modular pair X, Y. Modular cuts are in
// bijection with single-element extensions M + e: the cut is the set of
// flats whose closure picks up e.

#ifndef CFM_MODULAR_CUT_HPP_
#define CFM_MODULAR_CUT_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cfm/element_set.hpp"
#include "cfm/matroid.hpp"
#include "cfm/oracle.hpp"

namespace cfm {

namespace detail {

inline void require_flat(const Matroid& m, Mask f) {
  if (!m.is_flat(f)) throw usage_error(m.ground().format(f) + " is not a flat");
}

}  // namespace detail

/// r(X) + r(Y) = r(cl(X u Y)) + r(X n Y).
inline bool is_modular_pair(const Matroid& m, Mask x, Mask y) {
  detail::require_flat(m, x);
  detail::require_flat(m, y);
  return m.rank_of(x) + m.rank_of(y) == m.rank_of(x | y) + m.rank_of(x & y);
}

inline bool is_modular_pair(const Matroid& m, const ElementSet& x, const ElementSet& y) {
  return is_modular_pair(m, m.own(x), m.own(y));
}

inline bool is_modular_matroid(const Matroid& m) {
  for (const auto& row : m.relations().modular) {
    if (!row.all()) return false;
  }
  return true;
}

/// A modular cut of `host`, stored as the explicit sorted list of its flats.
class ModularCut {
 public:
  /// Validates `flats` and throws usage_error if they do not form a cut.
  static ModularCut checked(const Matroid& host, std::vector<Mask> flats);

  const Matroid& host() const { return host_; }
  const std::vector<Mask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Mask f) const { return std::binary_search(members_.begin(), members_.end(), f); }
  bool contains(const ElementSet& f) const { return contains(host_.own(f)); }
  std::vector<ElementSet> member_sets() const { return host_.wrap_all(members_); }

  /// The flats of the cut that are minimal under inclusion.
  std::vector<Mask> minimal_members() const {
    std::vector<Mask> out;
    for (Mask f : members_) {
      bool minimal = true;
      for (Mask g : members_) {
        if (g != f && is_subset(g, f)) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(f);
    }
    return out;
  }

  friend bool operator==(const ModularCut& a, const ModularCut& b) {
    return a.members_ == b.members_ && a.host_ == b.host_;
  }

 private:
  friend class CutBuilder;
  ModularCut(Matroid host, std::vector<Mask> members)
      : host_(std::move(host)), members_(std::move(members)) {}

  Matroid host_;
  std::vector<Mask> members_;
};

/// Direct check of the modular-cut conditions on an explicit family.
inline bool is_modular_cut(const Matroid& m, std::span<const Mask> flats) {
  std::vector<Mask> s(flats.begin(), flats.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (Mask f : s) detail::require_flat(m, f);
  auto in = [&](Mask f) { return std::binary_search(s.begin(), s.end(), f); };
  for (Mask f : m.lattice().flats) {
    if (in(f)) continue;
    for (Mask g : s) {
      if (is_subset(g, f)) return false;  // not closed upwards
    }
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!in(s[i] & s[j]) && is_modular_pair(m, s[i], s[j])) return false;
    }
  }
  return true;
}

inline bool is_modular_cut(const Matroid& m, const std::vector<ElementSet>& flats) {
  std::vector<Mask> raw;
  for (const auto& f : flats) raw.push_back(m.own(f));
  return is_modular_cut(m, raw);
}

inline ModularCut ModularCut::checked(const Matroid& host, std::vector<Mask> flats) {
  if (!is_modular_cut(host, flats)) throw usage_error("the given flats do not form a modular cut");
  std::sort(flats.begin(), flats.end());
  flats.erase(std::unique(flats.begin(), flats.end()), flats.end());
  return ModularCut(host, std::move(flats));
}

/// One firing of the modular-pair rule: left and right were in the cut,
/// form a modular pair, and their intersection `meet` was added.
struct ForcingStep {
  Mask left = 0;
  Mask right = 0;
  Mask meet = 0;

  friend bool operator==(const ForcingStep&, const ForcingStep&) = default;
};

/// Incremental construction of modular cuts over the flat lattice of a
/// matroid. Each flat is undecided, in, or out. `include` adds a flat and
/// propagates the filter and modular-pair rules; `exclude` rules out a flat
/// and everything below it. Both refuse (and leave the state untouched)
/// when they would put a flat both in and out.
class CutBuilder {
 public:
  explicit CutBuilder(const Matroid& m)
      : m_(m), lat_(&m.lattice()), rel_(&m.relations()), in_(lat_->size()), out_(lat_->size()) {}

  std::size_t flat_count() const { return lat_->size(); }
  bool is_in(std::size_t i) const { return in_.test(i); }
  bool is_out(std::size_t i) const { return out_.test(i); }
  bool decided(std::size_t i) const { return in_.test(i) || out_.test(i); }
  const FlagSet& in_set() const { return in_; }

  void record_steps(std::vector<ForcingStep>* trace) { trace_ = trace; }

  bool include_index(std::size_t i) {
    if (in_.test(i)) return true;
    FlagSet saved = in_;
    const std::size_t trace_size = trace_ ? trace_->size() : 0;
    if (!propagate(i)) {
      in_ = std::move(saved);
      if (trace_) trace_->resize(trace_size);
      return false;
    }
    return true;
  }
  bool include(Mask f) { return include_index(lat_->index_of(f)); }

  bool exclude_index(std::size_t i) {
    if (out_.test(i)) return true;
    if ((rel_->below[i] & in_).any()) return false;
    out_ |= rel_->below[i];
    return true;
  }
  bool exclude(Mask f) { return exclude_index(lat_->index_of(f)); }

  ModularCut cut() const {
    std::vector<Mask> members;
    for (auto i = in_.find_first(); i != FlagSet::npos; i = in_.find_next(i)) {
      members.push_back(lat_->flats[i]);
    }
    return ModularCut(m_, std::move(members));
  }

 private:
  bool add_filter(std::size_t i, std::deque<std::size_t>& work) {
    FlagSet fresh = rel_->above[i] - in_;
    if ((fresh & out_).any()) return false;
    in_ |= fresh;
    for (auto j = fresh.find_first(); j != FlagSet::npos; j = fresh.find_next(j)) work.push_back(j);
    return true;
  }

  bool propagate(std::size_t start) {
    std::deque<std::size_t> work;
    if (!add_filter(start, work)) return false;
    while (!work.empty()) {
      const std::size_t j = work.front();
      work.pop_front();
      FlagSet partners = in_ & rel_->modular[j];
      for (auto z = partners.find_first(); z != FlagSet::npos; z = partners.find_next(z)) {
        const Mask meet = lat_->flats[j] & lat_->flats[z];
        const std::size_t k = lat_->index_of(meet);
        if (in_.test(k)) continue;
        if (trace_) trace_->push_back({lat_->flats[z], lat_->flats[j], meet});
        if (!add_filter(k, work)) return false;
      }
    }
    return true;
  }

  Matroid m_;
  const FlatLattice* lat_;
  const FlatRelations* rel_;
  FlagSet in_, out_;
  std::vector<ForcingStep>* trace_ = nullptr;
};

/// The least modular cut containing the seeds, with the firing record of
/// every modular pair that added a new flat.
struct ForcedClosure {
  ModularCut cut;
  std::vector<Mask> seeds;
  std::vector<ForcingStep> steps;

  /// The firings needed to derive `target` (which must lie in the cut),
  /// in firing order. Empty when the target is above a seed.
  std::vector<ForcingStep> derivation(Mask target) const {
    if (!cut.contains(target)) throw usage_error("target flat is not in the cut");
    std::vector<bool> used(steps.size(), false);
    std::function<void(Mask, std::size_t)> need = [&](Mask t, std::size_t upto) {
      for (Mask s : seeds) {
        if (is_subset(s, t)) return;
      }
      for (std::size_t k = 0; k < upto; ++k) {
        if (is_subset(steps[k].meet, t)) {
          if (!used[k]) {
            used[k] = true;
            need(steps[k].left, k);
            need(steps[k].right, k);
          }
          return;
        }
      }
      throw std::logic_error("forcing record does not derive the target");
    };
    need(target, steps.size());
    std::vector<ForcingStep> out;
    for (std::size_t k = 0; k < steps.size(); ++k) {
      if (used[k]) out.push_back(steps[k]);
    }
    return out;
  }
};

inline ForcedClosure forced_closure_traced(const Matroid& m, std::span<const Mask> seeds) {
  for (Mask s : seeds) detail::require_flat(m, s);
  CutBuilder b(m);
  std::vector<ForcingStep> steps;
  b.record_steps(&steps);
  for (Mask s : seeds) b.include(s);  // nothing is excluded, so this cannot fail
  return {b.cut(), std::vector<Mask>(seeds.begin(), seeds.end()), std::move(steps)};
}

/// Take the filter generated by the seeds, then add the meet of every
/// modular pair inside it (and re-close upwards) until nothing changes.
inline ModularCut forced_closure(const Matroid& m, std::span<const Mask> seeds) {
  return forced_closure_traced(m, seeds).cut;
}

inline ModularCut forced_closure(const Matroid& m, const std::vector<ElementSet>& seeds) {
  std::vector<Mask> raw;
  for (const auto& s : seeds) raw.push_back(m.own(s));
  return forced_closure(m, raw);
}

enum class SearchStatus { complete, stopped, budget_exceeded };

/// Enumerates every modular cut that contains all `required` flats and none
/// of the `forbidden` ones, each exactly once. `visit(const ModularCut&)`
/// returns false to stop early. `nodes` counts search nodes across calls and
/// the search gives up once it passes `budget`.
template <class Visit>
SearchStatus enumerate_modular_cuts(const Matroid& m, std::span<const Mask> required,
                                    std::span<const Mask> forbidden, Visit&& visit,
                                    std::uint64_t budget = UINT64_MAX,
                                    std::uint64_t* nodes = nullptr) {
  std::uint64_t local = 0;
  std::uint64_t& count = nodes ? *nodes : local;
  CutBuilder root(m);
  for (Mask f : required) {
    detail::require_flat(m, f);
    if (!root.include(f)) return SearchStatus::complete;
  }
  for (Mask f : forbidden) {
    detail::require_flat(m, f);
    if (!root.exclude(f)) return SearchStatus::complete;
  }
  // Branch on flats from the top down.
  const auto& lat = m.lattice();
  std::vector<std::size_t> order;
  for (auto level = lat.by_rank.rbegin(); level != lat.by_rank.rend(); ++level) {
    order.insert(order.end(), level->begin(), level->end());
  }

  SearchStatus status = SearchStatus::complete;
  std::function<void(CutBuilder&, std::size_t)> rec = [&](CutBuilder& b, std::size_t pos) {
    if (status != SearchStatus::complete) return;
    if (++count > budget) {
      status = SearchStatus::budget_exceeded;
      return;
    }
    while (pos < order.size() && b.decided(order[pos])) ++pos;
    if (pos == order.size()) {
      if (!visit(b.cut())) status = SearchStatus::stopped;
      return;
    }
    const std::size_t f = order[pos];
    {
      CutBuilder with = b;
      if (with.include_index(f)) rec(with, pos + 1);
    }
    CutBuilder without = b;
    without.exclude_index(f);
    rec(without, pos + 1);
  };
  rec(root, 0);
  return status;
}

/// Single-element extension M + label determined by `cut`:
/// r'(X + e) = r(X) if cl(X) is in the cut, else r(X) + 1.
inline Matroid extend(const Matroid& m, const ModularCut& cut, const std::string& label) {
  if (!(cut.host() == m)) throw usage_error("modular cut belongs to a different matroid");
  if (m.ground().contains(label)) throw usage_error("label '" + label + "' already in the ground set");
  if (m.size() >= kMaxElements) throw usage_error("extension would exceed 64 elements");
  auto labels = m.ground().labels();
  labels.push_back(label);
  auto g = make_ground(std::move(labels));
  const Mask e = bit(m.size());
  auto rank = [&](Mask x) {
    if (!(x & e)) return m.rank_of(x);
    const Mask base = x & ~e;
    return m.rank_of(base) + (cut.contains(m.closure(base)) ? 0 : 1);
  };
  return Matroid::from_rank_oracle(g, CachedOracle(rank));
}

/// All flats containing `f`.
inline ModularCut principal_cut(const Matroid& m, Mask f) {
  detail::require_flat(m, f);
  std::vector<Mask> members;
  for (Mask g : m.lattice().flats) {
    if (is_subset(f, g)) members.push_back(g);
  }
  return ModularCut::checked(m, std::move(members));
}

/// Adds `label` freely to the flat `f`.
inline Matroid principal_extension(const Matroid& m, Mask f, const std::string& label) {
  return extend(m, principal_cut(m, f), label);
}

inline Matroid principal_extension(const Matroid& m, const ElementSet& f, const std::string& label) {
  return principal_extension(m, m.own(f), label);
}

/// Returns (m, f) when f is already cyclic; otherwise adds `label` freely to
/// f and returns the extension with the enlarged (now cyclic) flat.
inline std::pair<Matroid, Mask> make_cyclic(const Matroid& m, Mask f, const std::string& label) {
  detail::require_flat(m, f);
  if (m.is_cyclic(f)) return {m, f};
  Matroid ext = principal_extension(m, f, label);
  return {ext, f | bit(m.size())};
}

struct MpExtension {
  Matroid matroid;
  Mask points = 0;  // P, in the extension's indexing
};

/// Adds r-2 points p1, p2, ... one at a time, each via the cut
/// {cl(h), cl(h2), E} of the current matroid. The result has P independent
/// and P inside cl(h) n cl(h2).
inline MpExtension build_m_p(const Matroid& m, Mask h, Mask h2) {
  const int r = m.rank();
  if (r < 3) throw hypothesis_error("need rank at least 3");
  if (!m.is_flat(h) || !m.is_flat(h2) || m.rank_of(h) != r - 1 || m.rank_of(h2) != r - 1) {
    throw hypothesis_error("both sets must be hyperplanes");
  }
  if ((h & h2) != 0) throw hypothesis_error("hyperplanes are not disjoint");
  Matroid cur = m;
  Mask points = 0;
  for (int i = 1; i <= r - 2; ++i) {
    const Mask c1 = cur.closure(h), c2 = cur.closure(h2);
    const std::vector<Mask> gens{c1, c2, cur.full()};
    if (!is_modular_cut(cur, gens)) {
      throw std::logic_error("{cl(H), cl(H'), E} is not a modular cut at step " + std::to_string(i));
    }
    points |= bit(cur.size());
    cur = extend(cur, ModularCut::checked(cur, gens), "p" + std::to_string(i));
  }
  return {cur, points};
}

inline MpExtension build_m_p(const Matroid& m, const ElementSet& h, const ElementSet& h2) {
  return build_m_p(m, m.own(h), m.own(h2));
}

}  // namespace cfm

#endif  // CFM_MODULAR_CUT_HPP_
