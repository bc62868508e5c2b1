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

// The bundle condition and the intersection property.
//
// Conventions: a line is any rank-2 flat, two lines are coplanar when their
// union has rank at most 3, and two flats are disjoint when they meet only
// in the loops.

#ifndef CFM_PROPERTIES_HPP_
#define CFM_PROPERTIES_HPP_

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cfm/matroid.hpp"
#include "cfm/modular_cut.hpp"

namespace cfm {

/// Four lines of a rank-4 matroid, no three coplanar, and which of the six
/// pairs are coplanar (pairs index into `lines`, i < j).
struct LineQuadruple {
  std::array<Mask, 4> lines{};
  std::vector<std::pair<int, int>> coplanar_pairs;

  std::vector<std::pair<int, int>> non_coplanar_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        bool found = false;
        for (auto p : coplanar_pairs) found = found || p == std::pair(i, j);
        if (!found) out.emplace_back(i, j);
      }
    }
    return out;
  }
};

inline bool coplanar(const Matroid& m, Mask l1, Mask l2) { return m.rank_of(l1 | l2) <= 3; }

/// The first quadruple (lexicographic in the canonical line order) with no
/// three lines coplanar and exactly five coplanar pairs; nullopt when the
/// bundle condition holds.
inline std::optional<LineQuadruple> find_bundle_counterexample(const Matroid& m) {
  if (m.rank() != 4) throw usage_error("the bundle condition is defined for rank-4 matroids");
  const std::vector<Mask> lines = m.flat_masks(2);
  const std::size_t n = lines.size();
  std::vector<std::vector<char>> cp(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) cp[i][j] = cp[j][i] = coplanar(m, lines[i], lines[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (m.rank_of(lines[i] | lines[j] | lines[k]) != 4) continue;
        const int base = cp[i][j] + cp[i][k] + cp[j][k];
        if (base < 2) continue;  // at most one missing pair overall
        for (std::size_t l = k + 1; l < n; ++l) {
          const int count = base + cp[i][l] + cp[j][l] + cp[k][l];
          if (count != 5) continue;
          if (m.rank_of(lines[i] | lines[j] | lines[l]) != 4 ||
              m.rank_of(lines[i] | lines[k] | lines[l]) != 4 ||
              m.rank_of(lines[j] | lines[k] | lines[l]) != 4) {
            continue;
          }
          LineQuadruple q;
          q.lines = {lines[i], lines[j], lines[k], lines[l]};
          const std::array<std::size_t, 4> idx{i, j, k, l};
          for (int a = 0; a < 4; ++a) {
            for (int b = a + 1; b < 4; ++b) {
              if (cp[idx[a]][idx[b]]) q.coplanar_pairs.emplace_back(a, b);
            }
          }
          return q;
        }
      }
    }
  }
  return std::nullopt;
}

inline bool bundle_condition_holds(const Matroid& m) { return !find_bundle_counterexample(m); }

/// Unordered non-modular pairs of flats (x < y by mask), skipping E and
/// comparable pairs.
inline std::vector<std::pair<Mask, Mask>> non_modular_flat_pairs(const Matroid& m) {
  const auto& lat = m.lattice();
  const auto& rel = m.relations();
  std::vector<std::pair<Mask, Mask>> out;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat.flats[i] == m.full()) continue;
    for (std::size_t j = i + 1; j < lat.size(); ++j) {
      if (lat.flats[j] == m.full() || rel.modular[i].test(j)) continue;
      out.emplace_back(lat.flats[i], lat.flats[j]);
    }
  }
  return out;
}

/// The least modular cut containing x and y, if it avoids x n y. Any cut
/// containing x and y contains this one, so nullopt means no modular cut
/// separates the pair from its intersection.
inline std::optional<ModularCut> intersection_property_witness(const Matroid& m, Mask x, Mask y) {
  if (is_modular_pair(m, x, y)) throw usage_error("the pair of flats is modular");
  const Mask meet = x & y;
  CutBuilder b(m);
  b.exclude(meet);
  if (!b.include(x) || !b.include(y)) return std::nullopt;
  ModularCut cut = b.cut();
  if (!cut.contains(x) || !cut.contains(y) || cut.contains(meet) ||
      !is_modular_cut(m, cut.members())) {
    throw std::logic_error("intersection-property witness failed its soundness check");
  }
  return cut;
}

inline std::optional<ModularCut> intersection_property_witness(const Matroid& m, const ElementSet& x,
                                                               const ElementSet& y) {
  return intersection_property_witness(m, m.own(x), m.own(y));
}

struct IntersectionPropertyReport {
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::vector<std::pair<Mask, Mask>> failing;  // pairs without a witness
};

inline IntersectionPropertyReport intersection_property_holds(const Matroid& m) {
  IntersectionPropertyReport rep;
  for (auto [x, y] : non_modular_flat_pairs(m)) {
    ++rep.pairs_checked;
    if (!intersection_property_witness(m, x, y)) {
      rep.holds = false;
      rep.failing.emplace_back(x, y);
    }
  }
  return rep;
}

/// The line family built from two disjoint coplanar lines of a rank-4
/// matroid satisfying the bundle condition, plus the outcome of each check.
struct LSet {
  Mask plane = 0;
  Mask l1 = 0, l2 = 0;
  std::vector<Mask> lines_outside;  // not in the plane, coplanar with l1 and l2
  std::vector<Mask> lines_inside;   // in the plane, coplanar with some outside line
  std::vector<Mask> all;

  bool outside_pairwise_coplanar = true;      // (a)
  bool inside_coplanar_with_outside = true;   // (b)
  bool closed_under_two_planes = true;        // (c)
  bool pairwise_disjoint = true;
  bool filter_is_modular_cut = true;
  bool filter_excludes_loops = true;
  std::vector<Mask> filter;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

inline LSet l_construction(const Matroid& m, Mask l1, Mask l2) {
  if (m.rank() != 4) throw hypothesis_error("the line construction needs a rank-4 matroid");
  const Mask loops = m.loop_bits();
  for (Mask l : {l1, l2}) {
    if (!m.is_flat(l) || m.rank_of(l) != 2) throw usage_error(m.ground().format(l) + " is not a line");
  }
  if ((l1 & l2) != loops) throw hypothesis_error("the lines are not disjoint");
  if (m.rank_of(l1 | l2) != 3) throw hypothesis_error("the lines are not coplanar");
  if (!bundle_condition_holds(m)) throw hypothesis_error("the bundle condition fails");

  const GroundSet& g = m.ground();
  LSet s;
  s.l1 = l1;
  s.l2 = l2;
  s.plane = m.closure(l1 | l2);
  const std::vector<Mask> lines = m.flat_masks(2);
  for (Mask l : lines) {
    if (!is_subset(l, s.plane) && coplanar(m, l, l1) && coplanar(m, l, l2)) s.lines_outside.push_back(l);
  }
  for (Mask l : lines) {
    if (!is_subset(l, s.plane)) continue;
    for (Mask o : s.lines_outside) {
      if (coplanar(m, l, o)) {
        s.lines_inside.push_back(l);
        break;
      }
    }
  }
  s.all = {l1, l2};
  for (Mask l : s.lines_outside) s.all.push_back(l);
  for (Mask l : s.lines_inside) {
    if (l != l1 && l != l2) s.all.push_back(l);
  }
  std::sort(s.all.begin(), s.all.end());
  s.all.erase(std::unique(s.all.begin(), s.all.end()), s.all.end());
  auto in_family = [&](Mask l) { return std::binary_search(s.all.begin(), s.all.end(), l); };

  for (std::size_t i = 0; i < s.lines_outside.size(); ++i) {
    for (std::size_t j = i + 1; j < s.lines_outside.size(); ++j) {
      if (!coplanar(m, s.lines_outside[i], s.lines_outside[j])) {
        s.outside_pairwise_coplanar = false;
        s.failures.push_back("(a) " + g.format(s.lines_outside[i]) + " and " +
                             g.format(s.lines_outside[j]) + " are not coplanar");
      }
    }
  }
  for (Mask in : s.lines_inside) {
    for (Mask out : s.lines_outside) {
      if (!coplanar(m, in, out)) {
        s.inside_coplanar_with_outside = false;
        s.failures.push_back("(b) " + g.format(in) + " and " + g.format(out) + " are not coplanar");
      }
    }
  }
  for (Mask l : lines) {
    if (in_family(l)) continue;
    std::vector<Mask> planes;
    for (Mask f : s.all) {
      if (coplanar(m, l, f)) planes.push_back(m.closure(l | f));
    }
    std::sort(planes.begin(), planes.end());
    planes.erase(std::unique(planes.begin(), planes.end()), planes.end());
    if (planes.size() >= 2) {
      s.closed_under_two_planes = false;
      s.failures.push_back("(c) " + g.format(l) + " lies in two planes with lines of the family");
    }
  }
  for (std::size_t i = 0; i < s.all.size(); ++i) {
    for (std::size_t j = i + 1; j < s.all.size(); ++j) {
      if ((s.all[i] & s.all[j]) != loops) {
        s.pairwise_disjoint = false;
        s.failures.push_back("lines " + g.format(s.all[i]) + " and " + g.format(s.all[j]) + " meet");
      }
    }
  }
  for (Mask f : m.lattice().flats) {
    for (Mask l : s.all) {
      if (is_subset(l, f)) {
        s.filter.push_back(f);
        break;
      }
    }
  }
  s.filter_is_modular_cut = is_modular_cut(m, s.filter);
  if (!s.filter_is_modular_cut) s.failures.push_back("the generated filter is not a modular cut");
  s.filter_excludes_loops = !std::binary_search(s.filter.begin(), s.filter.end(), m.closure(l1 & l2));
  if (!s.filter_excludes_loops) s.failures.push_back("the generated filter contains cl(l1 n l2)");
  return s;
}

inline LSet l_construction(const Matroid& m, const ElementSet& l1, const ElementSet& l2) {
  return l_construction(m, m.own(l1), m.own(l2));
}

/// Pairs of lines meeting only in the loops whose union has rank 3.
inline std::vector<std::pair<Mask, Mask>> disjoint_coplanar_line_pairs(const Matroid& m) {
  std::vector<std::pair<Mask, Mask>> out;
  if (m.rank() < 3) return out;
  const auto lines = m.flat_masks(2);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if ((lines[i] & lines[j]) == m.loop_bits() && m.rank_of(lines[i] | lines[j]) == 3) {
        out.emplace_back(lines[i], lines[j]);
      }
    }
  }
  return out;
}

}  // namespace cfm

#endif  // CFM_PROPERTIES_HPP_
