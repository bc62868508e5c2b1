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

#ifndef CFM_MATROID_HPP_
#define CFM_MATROID_HPP_

#include <algorithm>
#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "cfm/axioms.hpp"
#include "cfm/element_set.hpp"
#include "cfm/oracle.hpp"
#include "cfm/presentation.hpp"

namespace cfm {

using FlagSet = boost::dynamic_bitset<std::uint64_t>;

/// Every flat of a matroid, sorted by mask value, with ranks and an index.
struct FlatLattice {
  std::vector<Mask> flats;
  std::vector<int> rank;
  std::vector<std::vector<std::size_t>> by_rank;  // indices, ascending mask
  std::unordered_map<Mask, std::size_t> index;

  std::size_t size() const { return flats.size(); }
  std::size_t index_of(Mask f) const {
    auto it = index.find(f);
    if (it == index.end()) throw usage_error("set is not a flat");
    return it->second;
  }
  bool contains(Mask f) const { return index.count(f) != 0; }
};

/// Pairwise relations between flats, indexed like FlatLattice::flats.
/// above[i][j] <=> flats[j] contains flats[i]; below is the transpose;
/// modular[i][j] <=> (flats[i], flats[j]) is a modular pair.
struct FlatRelations {
  std::vector<FlagSet> above;
  std::vector<FlagSet> below;
  std::vector<FlagSet> modular;
};

/// An immutable, validated matroid. Copies share the underlying data; derived
/// structure (flats, circuits, flat relations) is computed on first use under
/// std::call_once, so concurrent readers are safe.
class Matroid {
 public:
  static Matroid from_presentation(CyclicFlatPresentation p) {
    auto v = check_z_axioms(p);
    if (!v.empty()) {
      std::string msg = "presentation violates the cyclic-flat axioms:";
      for (const auto& x : v) msg += std::string("\n  ") + axiom_name(x.axiom) + ": " + x.detail;
      throw axiom_error(msg, std::move(v));
    }
    return Matroid(std::move(p));
  }

  /// Materialises the matroid whose rank function is `rank` (which must be
  /// a genuine matroid rank function on the ground set).
  template <RankOracle R>
  static Matroid from_rank_oracle(GroundPtr ground, const R& rank) {
    auto flats = cyclic_flats_in(rank, ground->full());
    return from_presentation(CyclicFlatPresentation(std::move(ground), std::move(flats)));
  }

  const GroundSet& ground() const { return d_->p.ground(); }
  const GroundPtr& ground_ptr() const { return d_->p.ground_ptr(); }
  const CyclicFlatPresentation& presentation() const { return d_->p; }
  std::size_t size() const { return ground().size(); }
  Mask full() const { return ground().full(); }
  int rank() const { return d_->rank; }
  ElementSet loops() const { return wrap(d_->loops); }
  Mask loop_bits() const { return d_->loops; }

  ElementSet wrap(Mask m) const { return ElementSet(ground_ptr(), m); }
  ElementSet set(std::initializer_list<std::string_view> labels) const {
    return ElementSet::of(ground_ptr(), labels);
  }
  Mask bits(std::initializer_list<std::string_view> labels) const {
    return ground().mask_of(labels);
  }

  int rank_of(Mask x) const { return d_->p.rank_of(x); }
  int rank_of(const ElementSet& x) const { return rank_of(own(x)); }

  Mask closure(Mask x) const {
    const int rx = rank_of(x);
    Mask cl = x;
    for_each_bit(full() & ~x, [&](std::size_t i) {
      if (rank_of(x | bit(i)) == rx) cl |= bit(i);
    });
    return cl;
  }
  ElementSet closure(const ElementSet& x) const { return wrap(closure(own(x))); }

  bool is_independent(Mask x) const { return rank_of(x) == popcount(x); }
  bool is_independent(const ElementSet& x) const { return is_independent(own(x)); }
  bool is_cyclic(Mask x) const { return is_cyclic_in(d_->p, x); }
  bool is_cyclic(const ElementSet& x) const { return is_cyclic(own(x)); }
  bool is_flat(Mask x) const { return closure(x) == x; }
  bool is_flat(const ElementSet& x) const { return is_flat(own(x)); }

  const FlatLattice& lattice() const {
    std::call_once(d_->lattice_once, [this] { d_->lattice = build_lattice(); });
    return d_->lattice;
  }

  const FlatRelations& relations() const {
    std::call_once(d_->relations_once, [this] { d_->relations = build_relations(); });
    return d_->relations;
  }

  const std::vector<Mask>& circuit_masks() const {
    std::call_once(d_->circuits_once, [this] { d_->circuits = build_circuits(); });
    return d_->circuits;
  }

  std::vector<ElementSet> circuits() const { return wrap_all(circuit_masks()); }

  std::vector<Mask> flat_masks(int k) const {
    if (k < 0 || k > rank()) {
      throw usage_error("flat rank " + std::to_string(k) + " outside 0.." + std::to_string(rank()));
    }
    const auto& lat = lattice();
    std::vector<Mask> out;
    for (auto i : lat.by_rank[static_cast<std::size_t>(k)]) out.push_back(lat.flats[i]);
    return out;
  }
  std::vector<ElementSet> flats_of_rank(int k) const { return wrap_all(flat_masks(k)); }
  std::vector<ElementSet> hyperplanes() const { return flats_of_rank(rank() - 1); }
  std::vector<ElementSet> lines() const { return rank() >= 2 ? flats_of_rank(2) : std::vector<ElementSet>{}; }
  std::vector<ElementSet> planes() const { return rank() >= 3 ? flats_of_rank(3) : std::vector<ElementSet>{}; }

  /// Recomputes the cyclic flats from the rank function alone.
  CyclicFlatPresentation cyclic_flats_from_oracle() const {
    std::vector<CyclicFlat> out;
    const auto& lat = lattice();
    for (std::size_t i = 0; i < lat.size(); ++i) {
      if (is_cyclic(lat.flats[i])) out.push_back({lat.flats[i], lat.rank[i]});
    }
    return CyclicFlatPresentation(ground_ptr(), std::move(out));
  }

  /// M|X on the labels of X, in this matroid's index order.
  Matroid restriction(Mask x) const {
    auto g = make_ground(ground().labels_of(x));
    const auto& p = d_->p;
    return from_rank_oracle(g, [&p, x](Mask y) { return p.rank_of(expand_bits(y, x)); });
  }
  Matroid restriction(const ElementSet& x) const { return restriction(own(x)); }

  Matroid deletion(Mask x) const { return restriction(full() & ~x); }
  Matroid deletion(const ElementSet& x) const { return deletion(own(x)); }

  /// M/X on E - X with r(Y) = r(Y u X) - r(X).
  Matroid contraction(Mask x) const {
    const Mask rest = full() & ~x;
    auto g = make_ground(ground().labels_of(rest));
    const auto& p = d_->p;
    const int rx = p.rank_of(x);
    return from_rank_oracle(
        g, [&p, x, rest, rx](Mask y) { return p.rank_of(expand_bits(y, rest) | x) - rx; });
  }
  Matroid contraction(const ElementSet& x) const { return contraction(own(x)); }

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.d_ == b.d_ || a.presentation() == b.presentation();
  }

  /// Throws unless x lives on this matroid's ground set; returns its bits.
  Mask own(const ElementSet& x) const {
    if (!same_universe(x.universe(), ground_ptr())) {
      throw usage_error("element set " + x.to_string() + " is not over this matroid's ground set");
    }
    return x.bits();
  }

  std::vector<ElementSet> wrap_all(const std::vector<Mask>& ms) const {
    std::vector<ElementSet> out;
    out.reserve(ms.size());
    for (Mask m : ms) out.push_back(wrap(m));
    return out;
  }

 private:
  struct Data {
    explicit Data(CyclicFlatPresentation pres) : p(std::move(pres)) {}
    CyclicFlatPresentation p;
    int rank = 0;
    Mask loops = 0;
    mutable std::once_flag lattice_once, relations_once, circuits_once;
    mutable FlatLattice lattice;
    mutable FlatRelations relations;
    mutable std::vector<Mask> circuits;
  };

  explicit Matroid(CyclicFlatPresentation p) {
    auto d = std::make_shared<Data>(std::move(p));
    d->rank = d->p.rank_of(d->p.ground().full());
    d->loops = d->p.flats().front().set;  // least cyclic flat; sorted, and a lattice
    for (const auto& z : d->p.flats()) d->loops &= z.set;
    d_ = std::move(d);
  }

  FlatLattice build_lattice() const {
    FlatLattice lat;
    auto levels = flats_by_rank(d_->p, full());
    for (const auto& level : levels) {
      for (Mask f : level) lat.flats.push_back(f);
    }
    std::sort(lat.flats.begin(), lat.flats.end());
    lat.rank.resize(lat.flats.size());
    lat.by_rank.resize(static_cast<std::size_t>(rank()) + 1);
    for (std::size_t i = 0; i < lat.flats.size(); ++i) {
      lat.index.emplace(lat.flats[i], i);
      lat.rank[i] = rank_of(lat.flats[i]);
      lat.by_rank[static_cast<std::size_t>(lat.rank[i])].push_back(i);
    }
    return lat;
  }

  FlatRelations build_relations() const {
    const auto& lat = lattice();
    const std::size_t n = lat.size();
    FlatRelations rel;
    rel.above.assign(n, FlagSet(n));
    rel.below.assign(n, FlagSet(n));
    rel.modular.assign(n, FlagSet(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const Mask x = lat.flats[i], y = lat.flats[j];
        if (is_subset(x, y)) {
          rel.above[i].set(j);
          rel.below[j].set(i);
        }
        if (is_subset(y, x)) {
          rel.above[j].set(i);
          rel.below[i].set(j);
        }
        bool mod = is_subset(x, y) || is_subset(y, x);
        if (!mod) {
          const int meet_rank = lat.rank[lat.index_of(x & y)];
          mod = lat.rank[i] + lat.rank[j] == rank_of(x | y) + meet_rank;
        }
        if (mod) {
          rel.modular[i].set(j);
          rel.modular[j].set(i);
        }
      }
    }
    return rel;
  }

  // Minimal dependent sets by increasing size; a circuit has at most r+1
  // elements. Sorted by mask value at the end.
  std::vector<Mask> build_circuits() const {
    std::vector<Mask> out;
    const std::size_t n = size();
    const std::size_t max_size = std::min<std::size_t>(n, static_cast<std::size_t>(rank()) + 1);
    for (std::size_t s = 1; s <= max_size; ++s) {
      Mask c = full_mask(s);
      const Mask limit = full();
      while (c != 0 && is_subset(c, limit)) {
        if (rank_of(c) == static_cast<int>(s) - 1) {
          bool minimal = true;
          for_each_bit(c, [&](std::size_t i) {
            if (minimal && !is_independent(c & ~bit(i))) minimal = false;
          });
          if (minimal) out.push_back(c);
        }
        // Gosper's hack: next subset of the same size.
        const Mask lo = c & (~c + 1);
        const Mask r = c + lo;
        if (r == 0) break;
        c = (((r ^ c) >> 2) / lo) | r;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::shared_ptr<const Data> d_;
};

/// U_{r,n} on labels "1".."n": cyclic flats {∅:0, E:r} when 0 < r < n.
inline Matroid uniform_matroid(int r, int n) {
  if (r < 0 || n < 0 || r > n || n > 64) throw usage_error("invalid uniform matroid parameters");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  auto g = make_ground(std::move(labels));
  std::vector<CyclicFlat> flats{{0, 0}};
  if (r < n && r > 0) flats.push_back({g->full(), r});
  if (r == 0 && n > 0) flats = {{g->full(), 0}};
  return Matroid::from_presentation(CyclicFlatPresentation(g, std::move(flats)));
}

inline Matroid free_matroid(std::vector<std::string> labels) {
  auto g = make_ground(std::move(labels));
  return Matroid::from_presentation(CyclicFlatPresentation(g, {{0, 0}}));
}

}  // namespace cfm

#endif  // CFM_MATROID_HPP_
