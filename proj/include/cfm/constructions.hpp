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

#ifndef CFM_CONSTRUCTIONS_HPP_
#define CFM_CONSTRUCTIONS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "cfm/axioms.hpp"
#include "cfm/matroid.hpp"
#include "cfm/modular_cut.hpp"

namespace cfm {

/// Rank 4 on {a,a',b,b',c,c',d,d'}; the proper nonempty cyclic flats are the
/// five sets {x,x',y,y'} other than {a,a',d,d'}, each of rank 3.
inline Matroid vamos() {
  auto g = make_ground({"a", "a'", "b", "b'", "c", "c'", "d", "d'"});
  auto pair = [&](const char* x, const char* y) {
    return g->mask_of({x, std::string(x) + "'", y, std::string(y) + "'"});
  };
  std::vector<CyclicFlat> z{{0, 0},
                            {pair("a", "b"), 3},
                            {pair("a", "c"), 3},
                            {pair("b", "c"), 3},
                            {pair("b", "d"), 3},
                            {pair("c", "d"), 3},
                            {g->full(), 4}};
  return Matroid::from_presentation(CyclicFlatPresentation(g, std::move(z)));
}

namespace detail {

inline std::vector<std::string> numbered(const std::string& prefix, int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Appends `extra` labels to m's ground set and builds the matroid whose
// cyclic flats are those of m plus `added`. Masks of m carry over unchanged.
inline Matroid adjoin_cyclic_flats(const Matroid& m, const std::vector<std::string>& extra,
                                   const std::vector<CyclicFlat>& added) {
  auto labels = m.ground().labels();
  labels.insert(labels.end(), extra.begin(), extra.end());
  auto g = make_ground(std::move(labels));
  std::vector<CyclicFlat> z = m.presentation().flats();
  z.insert(z.end(), added.begin(), added.end());
  CyclicFlatPresentation p(g, std::move(z));
  auto v = check_z_axioms(p);
  if (!v.empty()) {
    std::string msg = "constructed presentation fails the cyclic-flat axioms:";
    for (const auto& x : v) msg += std::string("\n  ") + axiom_name(x.axiom) + ": " + x.detail;
    throw std::logic_error(msg);
  }
  return Matroid::from_presentation(std::move(p));
}

}  // namespace detail

/// Extension N of M built from two disjoint hyperplanes. Masks of h1, h2,
/// a_set and b_set are in N's indexing, which extends that of m_prime.
struct PlanesConstruction {
  Matroid base;
  Matroid m_prime;
  Mask h = 0, h2 = 0;    // the input hyperplanes
  Mask h1 = 0, h2c = 0;  // cl(H), cl(H') in M', both cyclic
  Mask a_set = 0, b_set = 0;
  Matroid n;
};

/// Makes both hyperplanes cyclic (free points x1, x2 when needed), then
/// adjoins A = {a1..a(r-1)} and B = {b1..b(r-1)} with the cyclic flats
/// E(M') u A u B of rank r+1 and H1 u A, H1 u B, H2 u A, H2 u B of rank r.
inline PlanesConstruction build_n_planes(const Matroid& m, Mask h, Mask h2) {
  const int r = m.rank();
  if (r < 3) throw hypothesis_error("need rank at least 3");
  if (!m.is_flat(h) || !m.is_flat(h2) || m.rank_of(h) != r - 1 || m.rank_of(h2) != r - 1) {
    throw hypothesis_error("both sets must be hyperplanes");
  }
  if ((h & h2) != 0) throw hypothesis_error("hyperplanes are not disjoint");

  auto [m1, f1] = make_cyclic(m, h, "x1");
  auto [mp, f2] = make_cyclic(m1, h2, "x2");
  const Mask h1 = mp.closure(h), h2c = mp.closure(h2);
  const std::size_t base = mp.size();
  const Mask a = full_mask(static_cast<std::size_t>(r - 1)) << base;
  const Mask b = a << (r - 1);
  std::vector<std::string> extra = detail::numbered("a", r - 1);
  for (auto& l : detail::numbered("b", r - 1)) extra.push_back(l);
  const Mask top = mp.full() | a | b;
  Matroid n = detail::adjoin_cyclic_flats(
      mp, extra, {{top, r + 1}, {h1 | a, r}, {h1 | b, r}, {h2c | a, r}, {h2c | b, r}});
  return {m, mp, h, h2, h1, h2c, a, b, n};
}

inline PlanesConstruction build_n_planes(const Matroid& m, const ElementSet& h, const ElementSet& h2) {
  return build_n_planes(m, m.own(h), m.own(h2));
}

/// Extension N of M built from a disjoint line and hyperplane. All masks are
/// in N's indexing.
struct IpConstruction {
  Matroid base;
  Matroid m_prime;
  Mask line = 0;     // the cyclic line of M' (input line plus x1 if added)
  Mask h = 0;        // input hyperplane
  Mask h_prime = 0;  // H u A
  Mask a_set = 0;
  Mask d1 = 0, d2 = 0;
  Matroid n;
};

/// Makes the line cyclic (free point x1 when needed), adds A = {a1..a(r-3)}
/// freely to the hyperplane one point at a time, and adjoins D1 - A and
/// D2 - A (two points each) with the cyclic flats E(M') u D1 u D2 of rank r+1
/// and D1 u H', D1 u l, D2 u H', D2 u l of rank r.
inline IpConstruction build_n_ip(const Matroid& m, Mask line, Mask h) {
  const int r = m.rank();
  if (r < 4) throw hypothesis_error("need rank at least 4");
  if (!m.is_flat(line) || m.rank_of(line) != 2) throw hypothesis_error("line must be a rank-2 flat");
  if (!m.is_flat(h) || m.rank_of(h) != r - 1) throw hypothesis_error("h must be a hyperplane");
  if ((line & h) != 0) throw hypothesis_error("line and hyperplane are not disjoint");

  auto [cur, l] = make_cyclic(m, line, "x1");
  Mask a = 0;
  for (int i = 1; i <= r - 3; ++i) {
    a |= bit(cur.size());
    cur = principal_extension(cur, cur.closure(h), "a" + std::to_string(i));
  }
  const Matroid mp = cur;
  const Mask hp = mp.closure(h);
  const std::size_t base = mp.size();
  const Mask d1 = a | (Mask{3} << base);
  const Mask d2 = a | (Mask{3} << (base + 2));
  const Mask top = mp.full() | d1 | d2;
  Matroid n = detail::adjoin_cyclic_flats(
      mp, {"d1_1", "d1_2", "d2_1", "d2_2"},
      {{top, r + 1}, {d1 | hp, r}, {d1 | l, r}, {d2 | hp, r}, {d2 | l, r}});
  return {m, mp, l, h, hp, a, d1, d2, n};
}

inline IpConstruction build_n_ip(const Matroid& m, const ElementSet& line, const ElementSet& h) {
  return build_n_ip(m, m.own(line), m.own(h));
}

}  // namespace cfm

#endif  // CFM_CONSTRUCTIONS_HPP_
