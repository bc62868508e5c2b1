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

// Named end-to-end checks of the library's worked instances. Each returns a
// Report; exceptions become status "error".

#ifndef CFM_VERIFY_HPP_
#define CFM_VERIFY_HPP_

#include <algorithm>
#include <exception>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cfm/amalgam.hpp"
#include "cfm/axioms.hpp"
#include "cfm/constructions.hpp"
#include "cfm/counterexample.hpp"
#include "cfm/linear.hpp"
#include "cfm/matroid.hpp"
#include "cfm/modular_cut.hpp"
#include "cfm/properties.hpp"
#include "cfm/report.hpp"

namespace cfm {

/// The affine geometry AG(3,2): PG(3,2) with the plane x0 = 0 removed.
inline Matroid affine_geometry_3_2() {
  const Matroid pg = projective_geometry(4, 2);
  Mask keep = 0;
  for (std::size_t i = 0; i < pg.size(); ++i) {
    if (pg.ground().label(i).front() == '1') keep |= bit(i);
  }
  return pg.restriction(keep);
}

/// A U_{3,4} plane {1,2,3,4} with two free points 5, 6 in rank 4.
inline Matroid plane_with_two_free_points() {
  auto g = make_ground({"1", "2", "3", "4", "5", "6"});
  return Matroid::from_presentation(
      CyclicFlatPresentation(g, {{0, 0}, {g->mask_of({"1", "2", "3", "4"}), 3}, {g->full(), 4}}));
}

namespace detail {

inline Json quadruple_json(const GroundSet& g, const LineQuadruple& q) {
  Json j;
  j["lines"] = sets_json(g, {q.lines.begin(), q.lines.end()});
  Json np = Json::array();
  for (auto [a, b] : q.non_coplanar_pairs()) np.push_back(Json::array({set_json(g, q.lines[a]), set_json(g, q.lines[b])}));
  j["non_coplanar_pairs"] = np;
  return j;
}

inline Report verify_vamos() {
  Report rep("vamos");
  const Matroid m = vamos();
  const GroundSet& g = m.ground();
  rep.expect_eq("passes the cyclic-flat axioms", 0,
                static_cast<int>(check_z_axioms(m.presentation()).size()));
  rep.expect_eq("rank", 4, m.rank());
  rep.expect_eq("ground set size", 8, static_cast<int>(m.size()));
  std::vector<Mask> four_sets;
  for (const auto& z : m.presentation().flats()) {
    if (z.rank == 3 && popcount(z.set) == 4) four_sets.push_back(z.set);
  }
  auto pair = [&](const char* x, const char* y) {
    return g.mask_of({x, std::string(x) + "'", y, std::string(y) + "'"});
  };
  std::vector<Mask> expected{pair("a", "b"), pair("a", "c"), pair("b", "c"), pair("b", "d"), pair("c", "d")};
  std::sort(expected.begin(), expected.end());
  rep.expect_eq("rank-3 cyclic 4-sets", sets_json(g, expected), sets_json(g, four_sets));
  rep.expect_eq("{a,a',d,d'} is independent", 4, m.rank_of(pair("a", "d")));

  const auto found = find_bundle_counterexample(m);
  rep.expect_eq("bundle condition holds", false, !found.has_value());
  const LineQuadruple named{{g.mask_of({"a", "a'"}), g.mask_of({"b", "b'"}), g.mask_of({"c", "c'"}),
                             g.mask_of({"d", "d'"})},
                            {}};
  if (found) {
    rep.expect_eq("witness quadruple", quadruple_json(g, named)["lines"], quadruple_json(g, *found)["lines"]);
    rep.expect_eq("the non-coplanar pair", Json::array({Json::array({set_json(g, named.lines[0]), set_json(g, named.lines[3])})}),
                  quadruple_json(g, *found)["non_coplanar_pairs"]);
    rep.expect_eq("coplanar pairs", 5, static_cast<int>(found->coplanar_pairs.size()));
    rep.witnesses = {{"quadruple", quadruple_json(g, *found)}};
  }
  return rep;
}

inline Report verify_planes3() {
  Report rep("planes3");
  const Matroid m = uniform_matroid(3, 4);
  const Mask h = m.bits({"1", "2"}), h2 = m.bits({"3", "4"});
  const auto mp = build_m_p(m, h, h2);
  rep.expect_eq("|P|", 1, popcount(mp.points));
  rep.expect_eq("r_{M_P}(P)", 1, mp.matroid.rank_of(mp.points));
  const auto c = build_n_planes(m, h, h2);
  rep.expect_eq("N passes the cyclic-flat axioms", 0,
                static_cast<int>(check_z_axioms(c.n.presentation()).size()));
  const std::vector<Mask> seeds{c.h1, c.h2c};
  rep.expect_eq("forced closure of {H1,H2} contains cl(empty)", true,
                forced_closure(c.n, seeds).contains(c.n.closure(0)));
  rep.expect_eq("(H1,H2) has no intersection-property witness", false,
                intersection_property_witness(c.n, c.h1, c.h2c).has_value());
  const auto cert = verify_nonsticky_planes(m, h, h2);
  rep.expect_eq("certificate is valid", true, cert.certificate.valid());
  rep.expect_eq("amalgam search", "none",
                cert.search ? outcome_name(cert.search->outcome) : "not run");
  rep.absorb(cert.certificate.checks, "certificate: ");
  rep.witnesses = {{"certificate", cert.certificate.to_json()},
                   {"search_nodes", cert.search ? cert.search->explored : 0}};
  return rep;
}

inline Report verify_planes4() {
  Report rep("planes4");
  const Matroid m = uniform_matroid(4, 6);
  const Mask h = m.bits({"1", "2", "3"}), h2 = m.bits({"4", "5", "6"});
  const auto cert = verify_nonsticky_planes(m, h, h2);
  const int r = m.rank();
  rep.expect_eq("|P|", 2, popcount(cert.mp.points));
  rep.expect_eq("r_{M_P}(P)", 2, cert.mp.matroid.rank_of(cert.mp.points));
  rep.expect_eq("N passes the cyclic-flat axioms", 0,
                static_cast<int>(check_z_axioms(cert.construction.n.presentation()).size()));
  rep.expect_eq("2(r-1) >= (r+1) + r_N'(P) gives r_N'(P) <= 1", 1, 2 * (r - 1) - (r + 1));
  rep.expect_eq("certified bound", 1, cert.rank_bound);
  rep.expect_eq("certificate is valid", true, cert.certificate.valid());
  rep.expect_eq("extension chains examined", true, cert.chains_examined > 0);
  rep.absorb(cert.certificate.checks, "certificate: ");
  rep.witnesses = {{"certificate", cert.certificate.to_json()},
                   {"chains_examined", cert.chains_examined},
                   {"chains_exhaustive", cert.chains_exhaustive}};
  return rep;
}

inline Report verify_ip(const std::string& name, int r) {
  Report rep(name);
  const Matroid m = uniform_matroid(r, r + 1);
  const Mask line = m.bits({"1", "2"});
  const Mask h = m.full() & ~line;
  const auto c = build_n_ip(m, line, h);
  rep.expect_eq("N passes the cyclic-flat axioms", 0,
                static_cast<int>(check_z_axioms(c.n.presentation()).size()));
  rep.expect_eq("|A| = r-3", r - 3, popcount(c.a_set));
  const auto cert = verify_loop_argument(c);
  rep.expect_eq("certificate is valid", true, cert.valid());
  rep.expect_eq("forcing chain length", 4, static_cast<int>(cert.chain.size()));
  const GroundSet& g = c.n.ground();
  const std::vector<Mask> forced{c.d1, c.d2, c.a_set, c.n.closure(0)};
  const char* names[] = {"D1", "D2", "A", "cl(empty)"};
  for (std::size_t i = 0; i < forced.size() && i < cert.chain.size(); ++i) {
    rep.expect_eq(std::string("step ") + std::to_string(i + 1) + " forces " + names[i], set_json(g, forced[i]),
                  set_json(g, cert.chain[i].meet));
  }
  rep.absorb(cert.checks, "certificate: ");
  rep.witnesses = {{"certificate", cert.to_json()}};
  return rep;
}

inline Report verify_bundle_modular() {
  Report rep("bundle-modular");
  const Matroid pg = projective_geometry(4, 2);
  rep.expect_eq("PG(3,2) has 15 points", 15, static_cast<int>(pg.size()));
  rep.expect_eq("PG(3,2) is modular", true, is_modular_matroid(pg));
  rep.expect_eq("PG(3,2) satisfies the bundle condition", true, bundle_condition_holds(pg));
  const auto ip = intersection_property_holds(pg);
  rep.expect_eq("PG(3,2) has no non-modular pairs", 0, static_cast<int>(ip.pairs_checked));
  rep.expect_eq("AG(3,2) satisfies the bundle condition", true, bundle_condition_holds(affine_geometry_3_2()));
  rep.expect_eq("U(4,8) satisfies the bundle condition", true, bundle_condition_holds(uniform_matroid(4, 8)));
  rep.expect_eq("Vamos fails the bundle condition", false, bundle_condition_holds(vamos()));
  return rep;
}

inline Report verify_lset() {
  Report rep("lset");
  struct Instance {
    const char* name;
    Matroid m;
  };
  const std::vector<Instance> instances{{"PG(3,2)", projective_geometry(4, 2)},
                                        {"AG(3,2)", affine_geometry_3_2()},
                                        {"U(3,4) plane plus two free points", plane_with_two_free_points()}};
  Json counts = Json::object();
  for (const auto& in : instances) {
    rep.expect_eq(std::string(in.name) + ": bundle condition holds", true, bundle_condition_holds(in.m));
    const auto pairs = disjoint_coplanar_line_pairs(in.m);
    int passed = 0;
    Json failures = Json::array();
    for (auto [l1, l2] : pairs) {
      const LSet s = l_construction(in.m, l1, l2);
      if (s.ok()) {
        ++passed;
      } else {
        for (const auto& f : s.failures) failures.push_back(f);
      }
    }
    rep.expect_eq(std::string(in.name) + ": line pairs passing every check", static_cast<int>(pairs.size()),
                  passed);
    counts[in.name] = {{"disjoint_coplanar_pairs", pairs.size()}, {"failures", failures}};
  }
  rep.witnesses = counts;
  return rep;
}

}  // namespace detail

struct VerificationCheck {
  std::string name;
  std::function<Report()> run;
};

inline const std::vector<VerificationCheck>& verification_checks() {
  static const std::vector<VerificationCheck> checks{
      {"vamos", detail::verify_vamos},
      {"counterexample", verify_counterexample},
      {"planes3", detail::verify_planes3},
      {"planes4", detail::verify_planes4},
      {"ip4", [] { return detail::verify_ip("ip4", 4); }},
      {"ip5", [] { return detail::verify_ip("ip5", 5); }},
      {"bundle-modular", detail::verify_bundle_modular},
      {"lset", detail::verify_lset},
  };
  return checks;
}

/// Runs one named check; unknown names throw usage_error.
inline Report run_verification_check(const std::string& name) {
  for (const auto& c : verification_checks()) {
    if (c.name != name) continue;
    try {
      return c.run();
    } catch (const std::exception& e) {
      Report rep(name);
      rep.error = e.what();
      return rep;
    }
  }
  throw usage_error("unknown check '" + name + "'");
}

}  // namespace cfm

#endif  // CFM_VERIFY_HPP_
