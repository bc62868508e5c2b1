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

// Brute-force reference implementations used only by tests. Everything here
// works from a full table of ranks and shares no code with the library's
// lattice, cut or search machinery.

#ifndef CFM_TESTS_ORACLES_HPP_
#define CFM_TESTS_ORACLES_HPP_

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "cfm/cfm.hpp"

namespace oracle {

using cfm::Mask;

inline int pc(Mask m) { return std::popcount(m); }

/// The rank of every subset of an n-element set, read off the listed
/// cyclic flats with the min formula written out directly.
inline std::vector<int> rank_table_from_flats(const std::vector<cfm::CyclicFlat>& z, std::size_t n) {
  std::vector<int> r(std::size_t{1} << n);
  for (Mask x = 0; x < r.size(); ++x) {
    int best = INT_MAX;
    for (const auto& f : z) best = std::min(best, f.rank + pc(x & ~f.set));
    r[x] = best;
  }
  return r;
}

inline std::vector<int> rank_table(const cfm::Matroid& m) {
  std::vector<int> r(std::size_t{1} << m.size());
  for (Mask x = 0; x < r.size(); ++x) r[x] = m.rank_of(x);
  return r;
}

/// Normalization, unit increase and monotone submodularity over all pairs.
inline bool is_matroid_rank(const std::vector<int>& r) {
  const Mask top = static_cast<Mask>(r.size() - 1);
  if (r[0] != 0) return false;
  for (Mask x = 0; x <= top; ++x) {
    if (r[x] < 0 || r[x] > pc(x)) return false;
    for (Mask e = 1; e <= top; e <<= 1) {
      if (!(x & e) && (r[x | e] < r[x] || r[x | e] > r[x] + 1)) return false;
    }
  }
  for (Mask x = 0; x <= top; ++x) {
    for (Mask y = x; y <= top; ++y) {
      if (r[x] + r[y] < r[x | y] + r[x & y]) return false;
    }
  }
  return true;
}

struct Brute {
  std::size_t n;
  std::vector<int> r;

  Brute(std::size_t n_, std::vector<int> table) : n(n_), r(std::move(table)) {}
  explicit Brute(const cfm::Matroid& m) : n(m.size()), r(rank_table(m)) {}

  Mask top() const { return static_cast<Mask>(r.size() - 1); }

  Mask closure(Mask x) const {
    Mask c = x;
    for (std::size_t i = 0; i < n; ++i) {
      if (r[x | (Mask{1} << i)] == r[x]) c |= Mask{1} << i;
    }
    return c;
  }
  bool is_flat(Mask x) const { return closure(x) == x; }

  std::vector<Mask> flats() const {
    std::vector<Mask> out;
    for (Mask x = 0; x <= top(); ++x) {
      if (is_flat(x)) out.push_back(x);
    }
    return out;
  }

  /// Minimal dependent sets.
  std::vector<Mask> circuits() const {
    std::vector<Mask> out;
    for (Mask x = 1; x <= top(); ++x) {
      if (r[x] == pc(x)) continue;
      bool minimal = true;
      for (std::size_t i = 0; i < n && minimal; ++i) {
        const Mask e = Mask{1} << i;
        if ((x & e) && r[x & ~e] != pc(x & ~e)) minimal = false;
      }
      if (minimal) out.push_back(x);
    }
    return out;
  }

  /// Unions of circuits that are flats.
  std::vector<cfm::CyclicFlat> cyclic_flats() const {
    const auto cs = circuits();
    std::vector<cfm::CyclicFlat> out;
    for (Mask f : flats()) {
      Mask u = 0;
      for (Mask c : cs) {
        if ((c & ~f) == 0) u |= c;
      }
      if (u == f) out.push_back({f, r[f]});
    }
    return out;
  }

  bool modular_pair(Mask x, Mask y) const { return r[x] + r[y] == r[x | y] + r[x & y]; }

  /// Up-closed in the flats, closed under intersections of modular pairs.
  bool is_modular_cut(const std::vector<Mask>& family) const {
    std::set<Mask> s(family.begin(), family.end());
    const auto fs = flats();
    for (Mask f : s) {
      if (!is_flat(f)) return false;
      for (Mask g : fs) {
        if ((f & ~g) == 0 && !s.count(g)) return false;
      }
    }
    for (Mask x : s) {
      for (Mask y : s) {
        if (modular_pair(x, y) && !s.count(x & y)) return false;
      }
    }
    return true;
  }

  /// Every modular cut, by enumerating up-sets of the flat poset and
  /// filtering. Gives up (nullopt) after `cap` up-sets.
  std::optional<std::vector<std::vector<Mask>>> all_modular_cuts(std::size_t cap = 200000) const {
    std::vector<Mask> fs = flats();
    std::sort(fs.begin(), fs.end(), [](Mask a, Mask b) { return pc(a) != pc(b) ? pc(a) > pc(b) : a < b; });
    std::vector<std::vector<Mask>> out;
    std::size_t seen = 0;
    bool over = false;
    // Deciding flats in decreasing size: a flat may be included only if
    // every flat above it is already included.
    std::function<void(std::size_t, std::vector<char>&)> rec = [&](std::size_t i, std::vector<char>& in) {
      if (over) return;
      if (i == fs.size()) {
        if (++seen > cap) {
          over = true;
          return;
        }
        std::vector<Mask> fam;
        for (std::size_t k = 0; k < fs.size(); ++k) {
          if (in[k]) fam.push_back(fs[k]);
        }
        if (is_modular_cut(fam)) {
          std::sort(fam.begin(), fam.end());
          out.push_back(fam);
        }
        return;
      }
      bool can = true;
      for (std::size_t k = 0; k < i && can; ++k) {
        if ((fs[i] & ~fs[k]) == 0 && !in[k]) can = false;
      }
      in[i] = 0;
      rec(i + 1, in);
      if (can) {
        in[i] = 1;
        rec(i + 1, in);
        in[i] = 0;
      }
    };
    std::vector<char> in(fs.size(), 0);
    rec(0, in);
    if (over) return std::nullopt;
    std::sort(out.begin(), out.end());
    return out;
  }
};

/// Rank table of the single-element extension by `cut`, the new element
/// taking index n.
inline std::vector<int> extension_table(const Brute& b, const std::vector<Mask>& cut) {
  std::set<Mask> s(cut.begin(), cut.end());
  std::vector<int> r(std::size_t{1} << (b.n + 1));
  const Mask e = Mask{1} << b.n;
  for (Mask x = 0; x < r.size(); ++x) {
    if (!(x & e)) {
      r[x] = b.r[x];
    } else {
      const Mask y = x & ~e;
      r[x] = b.r[y] + (s.count(b.closure(y)) ? 0 : 1);
    }
  }
  return r;
}

/// Naive bundle check: every 4 lines, all triples spanning, count pairs.
inline bool bundle_holds(const cfm::Matroid& m) {
  const Brute b(m);
  std::vector<Mask> lines;
  for (Mask f : b.flats()) {
    if (b.r[f] == 2) lines.push_back(f);
  }
  auto cop = [&](Mask x, Mask y) { return b.r[x | y] <= 3; };
  const std::size_t n = lines.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          const Mask q[4] = {lines[i], lines[j], lines[k], lines[l]};
          bool ok = true;
          for (int a = 0; a < 4 && ok; ++a)
            for (int c = a + 1; c < 4 && ok; ++c)
              for (int d = c + 1; d < 4 && ok; ++d) ok = b.r[q[a] | q[c] | q[d]] == 4;
          if (!ok) continue;
          int count = 0;
          for (int a = 0; a < 4; ++a)
            for (int c = a + 1; c < 4; ++c) count += cop(q[a], q[c]);
          if (count == 5) return false;
        }
  return true;
}

/// Searches for a rank function on the union of two labelled matroids that
/// restricts to both, assigning ranks subset by subset in order of size and
/// checking unit increase and local submodularity as it goes.
inline bool amalgam_exists(const cfm::Matroid& a, const cfm::Matroid& b) {
  std::vector<std::string> labels = a.ground().labels();
  for (const auto& l : b.ground().labels()) {
    if (!a.ground().contains(l)) labels.push_back(l);
  }
  const std::size_t n = labels.size();
  auto g = cfm::make_ground(labels);
  const Mask ea = cfm::remap(a.full(), a.ground(), *g);
  const Mask eb = cfm::remap(b.full(), b.ground(), *g);
  const auto to_a = [&](Mask x) { return cfm::remap(x, *g, a.ground()); };
  const auto to_b = [&](Mask x) { return cfm::remap(x, *g, b.ground()); };

  std::vector<Mask> order;
  for (Mask x = 0; x < (Mask{1} << n); ++x) order.push_back(x);
  std::stable_sort(order.begin(), order.end(), [](Mask x, Mask y) { return pc(x) < pc(y); });
  std::vector<int> r(order.size(), -1);

  std::function<bool(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) return true;
    const Mask x = order[k];
    int lo = 0, hi = 0;
    if (x != 0) {
      lo = INT_MIN;
      hi = INT_MAX;
      for (std::size_t i = 0; i < n; ++i) {
        const Mask e = Mask{1} << i;
        if (!(x & e)) continue;
        lo = std::max(lo, r[x & ~e]);
        hi = std::min(hi, r[x & ~e] + 1);
      }
    }
    auto pin = [&](int v) {
      if (v < lo || v > hi) return false;
      lo = hi = v;
      return true;
    };
    if ((x & ~ea) == 0 && !pin(a.rank_of(to_a(x)))) return false;
    if ((x & ~eb) == 0 && !pin(b.rank_of(to_b(x)))) return false;
    for (int v = lo; v <= hi; ++v) {
      r[x] = v;
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        const Mask e = Mask{1} << i;
        if (!(x & e)) continue;
        for (std::size_t j = i + 1; j < n && ok; ++j) {
          const Mask f = Mask{1} << j;
          if (!(x & f)) continue;
          ok = r[x & ~e & ~f] + r[x] <= r[x & ~e] + r[x & ~f];
        }
      }
      if (ok && rec(k + 1)) return true;
    }
    r[x] = -1;
    return false;
  };
  return rec(0);
}

}  // namespace oracle

#endif  // CFM_TESTS_ORACLES_HPP_
