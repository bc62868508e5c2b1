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

// A rank-5 real-representable matroid with three rank-3 flats D1, D2, D3
// and a line l4 such that D1 u D2 spans while D1 u D3, D2 u D3 and
// Di u l4 span five different hyperplanes. Being representable it has the
// intersection property, which the report confirms directly.

#ifndef CFM_COUNTEREXAMPLE_HPP_
#define CFM_COUNTEREXAMPLE_HPP_

#include <functional>
#include <string>
#include <vector>

#include "cfm/linear.hpp"
#include "cfm/matroid.hpp"
#include "cfm/properties.hpp"
#include "cfm/report.hpp"

namespace cfm {

inline ExactMatrix counterexample_matrix() {
  const std::vector<std::vector<int>> cols{
      {0, 1, 2, 0, 0}, {0, 1, 3, 0, 0}, {1, 1, 4, 0, 0},   // D1
      {0, 0, 0, 1, 2}, {0, 0, 0, 1, 3}, {1, 0, 0, 1, 4},   // D2
      {0, 0, 1, 2, 0}, {0, 0, 1, 3, 0}, {1, 0, 1, 4, 0},   // D3
      {1, 1, 1, 1, 1}, {0, 1, 1, 1, 1}};                   // l4
  const std::vector<std::string> labels{"d1_1", "d1_2", "d1_3", "d2_1", "d2_2", "d2_3",
                                        "d3_1", "d3_2", "d3_3", "l4_1", "l4_2"};
  std::vector<std::vector<Rational>> entries;
  for (const auto& c : cols) entries.emplace_back(c.begin(), c.end());
  ExactMatrix a(Field::rationals(), 5, labels, std::move(entries));
  a.set_group("D1", {"d1_1", "d1_2", "d1_3"});
  a.set_group("D2", {"d2_1", "d2_2", "d2_3"});
  a.set_group("D3", {"d3_1", "d3_2", "d3_3"});
  a.set_group("l4", {"l4_1", "l4_2"});
  return a;
}

inline Matroid counterexample_rank5() { return column_matroid(counterexample_matrix()); }

/// Runs the seven checks on the column matroid of counterexample_matrix().
inline Report verify_counterexample() {
  Report rep("counterexample");
  const ExactMatrix a = counterexample_matrix();
  const Matroid m = column_matroid(a);
  const GroundSet& g = m.ground();
  auto group = [&](const std::string& name) { return g.mask_of(a.groups().at(name)); };
  const Mask d1 = group("D1"), d2 = group("D2"), d3 = group("D3"), l4 = group("l4");

  // Columns satisfying a predicate on their (0-based) entries.
  auto where = [&](const std::function<bool(const std::vector<Rational>&)>& pred) {
    Mask out = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (pred(a.column(j))) out |= bit(j);
    }
    return out;
  };

  rep.expect_eq("(1) rank of M", 5, m.rank());
  rep.expect_eq("(1) ranks of D1, D2, D3, l4", Json({3, 3, 3, 2}),
                Json({m.rank_of(d1), m.rank_of(d2), m.rank_of(d3), m.rank_of(l4)}));

  struct Hyperplane {
    const char* name;
    Mask generators;
    Mask predicted;
  };
  const std::vector<Hyperplane> hyperplanes{
      {"(2) cl(D1 u l4) = last two entries equal", d1 | l4,
       where([](const auto& c) { return c[3] == c[4]; })},
      {"(3) cl(D2 u l4) = second and third entries equal", d2 | l4,
       where([](const auto& c) { return c[1] == c[2]; })},
      {"(3) cl(D3 u l4) = second and last entries equal", d3 | l4,
       where([](const auto& c) { return c[1] == c[4]; })},
      {"(5) cl(D1 u D3) = last entry zero", d1 | d3, where([](const auto& c) { return c[4] == 0; })},
      {"(5) cl(D2 u D3) = second entry zero", d2 | d3,
       where([](const auto& c) { return c[1] == 0; })},
  };
  std::vector<Mask> spans;
  for (const auto& h : hyperplanes) {
    const Mask cl = m.closure(h.generators);
    spans.push_back(cl);
    rep.expect_eq(h.name, set_json(g, h.predicted), set_json(g, cl));
    rep.expect_eq(std::string(h.name) + ": rank", 4, m.rank_of(cl));
  }

  rep.expect_eq("(4) D1 u D2 spans M", 5, m.rank_of(d1 | d2));

  std::vector<Mask> distinct = spans;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  rep.expect_eq("(6) five different hyperplanes", 5, static_cast<int>(distinct.size()));

  const auto ip = intersection_property_holds(m);
  rep.expect_eq("(7) intersection property holds", true, ip.holds);
  Json failing = Json::array();
  for (auto [x, y] : ip.failing) failing.push_back(Json::array({set_json(g, x), set_json(g, y)}));
  rep.witnesses = {{"non_modular_pairs_checked", ip.pairs_checked}, {"pairs_without_witness", failing}};
  return rep;
}

}  // namespace cfm

#endif  // CFM_COUNTEREXAMPLE_HPP_
