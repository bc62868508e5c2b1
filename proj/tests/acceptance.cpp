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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "axiom_sweep.hpp"
#include "cfm/cfm.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace {

using namespace cfm;

// Collects failed conditions; the criterion passes when none failed.
class Tally {
 public:
  void require(bool ok, const std::string& what) {
    ++checked_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream o;
    o << checked_ << " checks";
    if (!notes_.empty()) o << "; " << notes_;
    for (const auto& f : failures_) o << "\n    failed: " << f;
    if (failed_ > failures_.size()) o << "\n    ... " << failed_ - failures_.size() << " more";
    return o.str();
  }

 private:
  std::size_t checked_ = 0, failed_ = 0;
  std::vector<std::string> failures_;
  std::string notes_;
};

bool replays_on_table(const oracle::Brute& b, std::vector<Mask> known, const std::vector<ForcingStep>& chain) {
  auto above = [&](Mask f) {
    return std::any_of(known.begin(), known.end(), [&](Mask k) { return (k & ~f) == 0; });
  };
  for (const auto& s : chain) {
    if (!above(s.left) || !above(s.right)) return false;
    if (!b.is_flat(s.left) || !b.is_flat(s.right) || !b.modular_pair(s.left, s.right)) return false;
    if (s.meet != (s.left & s.right)) return false;
    known.push_back(s.meet);
  }
  return true;
}

// Vámos matroid.
void vamos_suite(Tally& t) {
  const Matroid v = vamos();
  const oracle::Brute b(v);
  t.require(check_z_axioms(v.presentation()).empty(), "axioms");
  t.require(v.rank() == 4 && v.size() == 8, "rank 4 on 8 elements");
  t.require(oracle::is_matroid_rank(b.r), "rank function");

  std::vector<Mask> rank3;
  for (const auto& z : b.cyclic_flats()) {
    if (popcount(z.set) == 4 && z.rank == 3) rank3.push_back(z.set);
  }
  const std::vector<std::vector<std::string_view>> pairs{{"a", "a'", "b", "b'"}, {"a", "a'", "c", "c'"},
                                                         {"b", "b'", "c", "c'"}, {"b", "b'", "d", "d'"},
                                                         {"c", "c'", "d", "d'"}};
  std::vector<Mask> expected;
  for (const auto& p : pairs) {
    Mask m = 0;
    for (auto l : p) m |= bit(*v.ground().index_of(l));
    expected.push_back(m);
  }
  std::sort(expected.begin(), expected.end());
  t.require(rank3 == expected, "five rank-3 cyclic 4-sets");
  t.require(b.r[v.bits({"a", "a'", "d", "d'"})] == 4, "{a,a',d,d'} independent");

  t.require(!bundle_condition_holds(v) && !oracle::bundle_holds(v), "bundle condition fails");
  const auto q = find_bundle_counterexample(v);
  t.require(q.has_value(), "counterexample quadruple");
  if (q) {
    const auto np = q->non_coplanar_pairs();
    t.require(np.size() == 1 && q->coplanar_pairs.size() == 5, "five coplanar pairs");
    if (np.size() == 1) {
      std::set<Mask> pair{q->lines[np[0].first], q->lines[np[0].second]};
      t.require(pair == std::set<Mask>{v.bits({"a", "a'"}), v.bits({"d", "d'"})}, "non-coplanar pair is aa', dd'");
    }
  }
}

// The rank-5 linear counterexample.
void counterexample_suite(Tally& t) {
  const Report rep = verify_counterexample();
  t.require(!rep.error.has_value(), rep.error.value_or(""));
  for (int k = 1; k <= 7; ++k) {
    const std::string tag = "(" + std::to_string(k) + ")";
    bool seen = false, ok = true;
    for (const auto& c : rep.checks) {
      if (c.name.rfind(tag, 0) != 0) continue;
      seen = true;
      ok = ok && c.ok;
      if (!c.ok) t.require(false, c.name);
    }
    t.require(seen && ok, "check " + tag);
  }
  // Independent recomputation of the spanning and rank facts on the matrix.
  const ExactMatrix a = counterexample_matrix();
  const Matroid m = column_matroid(a);
  auto group = [&](const std::string& name) {
    Mask x = 0;
    for (const auto& l : a.groups().at(name)) x |= bit(*m.ground().index_of(l));
    return x;
  };
  t.require(a.rank_of_columns(m.full()) == 5, "rank 5");
  t.require(a.rank_of_columns(group("D1")) == 3 && a.rank_of_columns(group("D2")) == 3 &&
                a.rank_of_columns(group("D3")) == 3 && a.rank_of_columns(group("l4")) == 2,
            "group ranks 3,3,3,2");
  t.require(a.rank_of_columns(group("D1") | group("D2")) == 5, "D1 u D2 spans");
  const std::set<Mask> hyperplanes{m.closure(group("D1") | group("l4")), m.closure(group("D2") | group("l4")),
                                   m.closure(group("D3") | group("l4")), m.closure(group("D1") | group("D3")),
                                   m.closure(group("D2") | group("D3"))};
  t.require(hyperplanes.size() == 5, "five distinct hyperplanes");
  for (Mask h : hyperplanes) t.require(m.rank_of(h) == 4, "hyperplane rank");
}

// Cyclic-flat axiom validator.
void validator_suite(Tally& t) {
  const std::uint64_t counts[] = {1, 2, 5, 16, 68, 406};
  sweep::Stats total;
  auto add = [&](const sweep::Stats& s, const std::string& what, std::int64_t accepted) {
    total.merge(s);
    t.require(s.ok(), what + ": " + s.first_mismatch);
    if (accepted >= 0) {
      t.require(s.accepted == static_cast<std::uint64_t>(accepted),
                what + ": accepted " + std::to_string(s.accepted) + ", expected " + std::to_string(accepted));
    }
  };
  for (std::size_t n = 0; n <= 3; ++n) {
    add(sweep::exhaustive(n, std::size_t{1} << n), "n=" + std::to_string(n), static_cast<std::int64_t>(counts[n]));
  }
  add(sweep::exhaustive(4, 5), "n=4", static_cast<std::int64_t>(counts[4]));
  add(sweep::exhaustive(5, 4), "n=5", static_cast<std::int64_t>(counts[5]));
  add(sweep::randomized(6, 400, 601), "random n=6", -1);
  add(sweep::randomized(7, 300, 701), "random n=7", -1);
  t.note(std::to_string(total.checked) + " candidates, " + std::to_string(total.accepted) + " accepted");
}

// Planes construction, rank 3.
void planes3_suite(Tally& t) {
  const Matroid u = uniform_matroid(3, 4);
  const Mask h = u.bits({"1", "2"}), h2 = u.bits({"3", "4"});
  const MpExtension mp = build_m_p(u, h, h2);
  t.require(popcount(mp.points) == 1 && mp.matroid.rank_of(mp.points) == 1, "|P| = 1, r(P) = 1");
  const PlanesConstruction c = build_n_planes(u, h, h2);
  t.require(check_z_axioms(c.n.presentation()).empty(), "N passes the axioms");
  t.require(oracle::is_matroid_rank(oracle::rank_table(c.n)), "N rank function");
  const std::vector<Mask> seeds{c.h1, c.h2c};
  const auto fc = forced_closure_traced(c.n, seeds);
  t.require(fc.cut.contains(0), "forced closure contains the empty flat");
  t.require(replays_on_table(oracle::Brute(c.n), seeds, fc.derivation(0)), "derivation replays on the rank table");

  const PlanesCertificate pc = verify_nonsticky_planes(u, h, h2);
  t.require(pc.certificate.valid() && replay(pc.certificate), "certificate valid and replayable");
  const auto direct = has_amalgam(AmalgamProblem::make(c.n, mp.matroid));
  t.require(direct.outcome == AmalgamOutcome::none, "no amalgam of N and M_P");
  t.require(pc.search && pc.search->outcome == direct.outcome, "certificate agrees with the search");
}

// Planes construction, rank 4.
void planes4_suite(Tally& t) {
  const Matroid u = uniform_matroid(4, 6);
  const Mask h = u.bits({"1", "2", "3"}), h2 = u.bits({"4", "5", "6"});
  const MpExtension mp = build_m_p(u, h, h2);
  t.require(popcount(mp.points) == 2 && mp.matroid.rank_of(mp.points) == 2, "|P| = 2, r(P) = 2");
  const PlanesCertificate pc = verify_nonsticky_planes(u, h, h2);
  const auto& n = pc.construction.n;
  const int ra = n.rank_of(pc.construction.a_set), rb = n.rank_of(pc.construction.b_set);
  const int rab = n.rank_of(pc.construction.a_set | pc.construction.b_set);
  t.require(ra == 3 && rb == 3 && rab == 5, "r(A) = r(B) = 3, r(A u B) = 5");
  t.require(pc.rank_bound == ra + rb - rab && pc.rank_bound == 1, "6 >= 5 + r(P) gives r(P) <= 1");
  t.require(pc.rank_bound < mp.matroid.rank_of(mp.points), "bound below r_{M_P}(P)");
  t.require(pc.certificate.valid() && replay(pc.certificate), "certificate valid and replayable");
  const auto fc = forced_closure(n, pc.certificate.seeds);
  t.require(fc.contains(pc.construction.a_set) && fc.contains(pc.construction.b_set),
            "every extension with p on both hyperplanes has p on A and B");
  t.note(std::to_string(pc.chains_examined) + " extension chains cross-checked");
}

// Loop argument.
void loop_suite(Tally& t) {
  struct Instance {
    Matroid m;
    Mask line, h;
  };
  const Matroid u45 = uniform_matroid(4, 5), u56 = uniform_matroid(5, 6);
  const std::vector<Instance> instances{{u45, u45.bits({"1", "2"}), u45.bits({"3", "4", "5"})},
                                        {u56, u56.bits({"1", "2"}), u56.bits({"3", "4", "5", "6"})}};
  for (const auto& in : instances) {
    const std::string r = "r=" + std::to_string(in.m.rank());
    const IpConstruction c = build_n_ip(in.m, in.line, in.h);
    t.require(check_z_axioms(c.n.presentation()).empty(), r + ": N passes the axioms");
    t.require(c.n.loop_bits() == 0, r + ": N is loopless");
    const Certificate cert = verify_loop_argument(c);
    t.require(cert.valid() && replay(cert), r + ": certificate valid and replayable");
    const auto& ch = cert.chain;
    t.require(ch.size() == 4, r + ": four steps");
    if (ch.size() != 4) continue;
    t.require(ch[0].left == (c.d1 | c.line) && ch[0].right == (c.d1 | c.h_prime) && ch[0].meet == c.d1,
              r + ": D1 forced by (D1 u l, D1 u H')");
    t.require(ch[1].left == (c.d2 | c.line) && ch[1].right == (c.d2 | c.h_prime) && ch[1].meet == c.d2,
              r + ": D2 forced by (D2 u l, D2 u H')");
    t.require(ch[2].meet == c.a_set, r + ": A forced by (D1, D2)");
    t.require(ch[3].meet == c.n.closure(0), r + ": loop via (A, l)");
    t.require(replays_on_table(oracle::Brute(c.n), cert.seeds, ch), r + ": chain replays on the rank table");
  }
}

// Line construction on modular and near-modular instances.
void line_family_suite(Tally& t) {
  struct Instance {
    std::string name;
    Matroid m;
  };
  const std::vector<Instance> instances{{"PG(3,2)", projective_geometry(4, 2)},
                                        {"AG(3,2)", affine_geometry_3_2()},
                                        {"plane+2", plane_with_two_free_points()}};
  const Matroid& pg = instances[0].m;
  t.require(is_modular_matroid(pg), "PG(3,2) is modular");
  t.require(bundle_condition_holds(pg) && oracle::bundle_holds(pg), "PG(3,2) satisfies the bundle condition");
  for (const auto& in : instances) {
    const oracle::Brute b(in.m);
    const auto pairs = disjoint_coplanar_line_pairs(in.m);
    for (auto [l1, l2] : pairs) {
      const LSet s = l_construction(in.m, l1, l2);
      const std::string tag = in.name + " " + in.m.ground().format(l1) + "," + in.m.ground().format(l2);
      t.require(s.outside_pairwise_coplanar, tag + ": (a)");
      t.require(s.inside_coplanar_with_outside, tag + ": (b)");
      t.require(s.closed_under_two_planes, tag + ": (c)");
      t.require(s.pairwise_disjoint, tag + ": pairwise disjoint");
      t.require(s.filter_is_modular_cut && b.is_modular_cut(s.filter), tag + ": filter is a modular cut");
      t.require(std::find(s.filter.begin(), s.filter.end(), b.closure(0)) == s.filter.end(),
                tag + ": filter excludes the loops");
    }
    t.note(in.name + " " + std::to_string(pairs.size()) + " pairs");
  }
}

// Modular-cut machinery against brute force.
void modular_cut_suite(Tally& t) {
  std::vector<std::pair<std::string, Matroid>> ms;
  for (auto& [name, m] : gen::named_matroids()) {
    if (m.size() <= 7) ms.emplace_back(name, m);
  }
  gen::Rng rng(808);
  while (ms.size() < 90) {
    Matroid m = gen::random_matroid(rng, 3, 7);
    if (m.lattice().flats.size() <= 40) ms.emplace_back(m.presentation().to_string(), m);
  }
  std::size_t cuts_total = 0, seed_sets = 0;
  for (const auto& [name, m] : ms) {
    const oracle::Brute b(m);
    const auto cuts = b.all_modular_cuts();
    t.require(cuts.has_value(), name + ": brute-force enumeration");
    if (!cuts) continue;
    std::vector<std::vector<Mask>> lib;
    const auto status = enumerate_modular_cuts(m, {}, {}, [&](const ModularCut& c) {
      lib.push_back(c.members());
      return true;
    });
    std::sort(lib.begin(), lib.end());
    t.require(status == SearchStatus::complete && lib == *cuts, name + ": enumeration matches");

    const auto flats = b.flats();
    std::vector<std::vector<Mask>> seed_lists;
    for (Mask f : flats) seed_lists.push_back({f});
    std::uniform_int_distribution<std::size_t> pick(0, flats.size() - 1);
    for (int k = 0; k < 20; ++k) seed_lists.push_back({flats[pick(rng)], flats[pick(rng)]});
    for (int k = 0; k < 10; ++k) seed_lists.push_back({flats[pick(rng)], flats[pick(rng)], flats[pick(rng)]});
    for (const auto& seeds : seed_lists) {
      ++seed_sets;
      std::vector<Mask> meet = flats;
      for (const auto& c : *cuts) {
        if (!std::all_of(seeds.begin(), seeds.end(), [&](Mask s) { return std::binary_search(c.begin(), c.end(), s); }))
          continue;
        std::vector<Mask> next;
        std::set_intersection(meet.begin(), meet.end(), c.begin(), c.end(), std::back_inserter(next));
        meet = std::move(next);
      }
      std::sort(meet.begin(), meet.end());
      t.require(forced_closure(m, seeds).members() == meet, name + ": forced closure");
    }
    for (const auto& c : *cuts) {
      ++cuts_total;
      const Matroid ext = extend(m, ModularCut::checked(m, c), "e");
      t.require(ext.deletion(bit(m.size())) == m, name + ": deletion recovers the matroid");
      t.require(oracle::rank_table(ext) == oracle::extension_table(b, c), name + ": extension ranks");
    }
  }
  t.note(std::to_string(ms.size()) + " matroids, " + std::to_string(cuts_total) + " cuts, " +
         std::to_string(seed_sets) + " seed sets");
}

// Oracle equivalence on random presentations.
void oracle_suite(Tally& t) {
  gen::Rng rng(909);
  for (int k = 0; k < 500; ++k) {
    const Matroid m = gen::random_matroid(rng, 0, 7);
    const std::string tag = m.presentation().to_string();
    const auto table = oracle::rank_table(m);
    t.require(oracle::is_matroid_rank(table), tag + ": rank axioms");
    t.require(table == oracle::rank_table_from_flats(m.presentation().flats(), m.size()), tag + ": rank formula");
    const oracle::Brute b(m.size(), table);
    bool closure_ok = true;
    for (Mask x = 0; x <= m.full(); ++x) {
      const Mask cl = m.closure(x);
      closure_ok = closure_ok && cl == b.closure(x) && m.closure(cl) == cl;
    }
    t.require(closure_ok, tag + ": closure idempotent and exact");

    std::uniform_int_distribution<Mask> any(0, m.full());
    const Mask x = any(rng), rest = m.full() & ~x;
    const Matroid res = m.restriction(x), con = m.contraction(x);
    bool minors_ok = true;
    for (Mask y = 0; y <= res.full(); ++y) minors_ok = minors_ok && res.rank_of(y) == table[expand_bits(y, x)];
    for (Mask y = 0; y <= con.full(); ++y) {
      minors_ok = minors_ok && con.rank_of(y) == table[expand_bits(y, rest) | x] - table[x];
    }
    t.require(minors_ok, tag + ": restriction and contraction ranks");

    const auto flats = b.flats();
    auto lib_flats = m.lattice().flats;
    t.require(lib_flats == flats, tag + ": flats in canonical order");
    t.require(m.circuit_masks() == b.circuits(), tag + ": circuits in canonical order");
    auto shuffled = m.presentation().flats();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const Matroid again = Matroid::from_presentation(CyclicFlatPresentation(m.ground_ptr(), shuffled));
    t.require(again.presentation().flats() == m.presentation().flats() && again.lattice().flats == lib_flats &&
                  again.circuit_masks() == m.circuit_masks(),
              tag + ": enumerations independent of input order");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    std::function<void(Tally&)> run;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "Vamos matroid", vamos_suite},
      {"AC2", "rank-5 linear counterexample", counterexample_suite},
      {"AC3", "cyclic-flat axiom validator", validator_suite},
      {"AC4", "rank-3 planes construction", planes3_suite},
      {"AC5", "rank-4 planes construction", planes4_suite},
      {"AC6", "loop argument", loop_suite},
      {"AC7", "line families in bundle matroids", line_family_suite},
      {"AC8", "modular-cut machinery", modular_cut_suite},
      {"AC9", "oracle equivalence", oracle_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(t);
    } catch (const std::exception& e) {
      t.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s  %s (%.1fs, %s)\n", c.id, t.ok() ? "PASS" : "FAIL", c.title, secs, t.summary().c_str());
    std::fflush(stdout);
    if (!t.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
