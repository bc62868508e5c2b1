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

// Amalgam search and certificates that two extensions have no amalgam.

#ifndef CFM_AMALGAM_HPP_
#define CFM_AMALGAM_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cfm/constructions.hpp"
#include "cfm/matroid.hpp"
#include "cfm/modular_cut.hpp"
#include "cfm/report.hpp"

namespace cfm {

/// A certificate that failed one of its own checks.
class certificate_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Re-expresses a subset of `from` in the indexing of `to`, by label.
inline Mask remap(Mask m, const GroundSet& from, const GroundSet& to) {
  Mask out = 0;
  for_each_bit(m, [&](std::size_t i) { out |= bit(to.require(from.label(i))); });
  return out;
}

/// Equal as matroids on labelled ground sets (index order may differ).
inline bool same_labeled_matroid(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size()) return false;
  for (const auto& l : a.ground().labels()) {
    if (!b.ground().contains(l)) return false;
  }
  const auto& za = a.presentation().flats();
  if (za.size() != b.presentation().size()) return false;
  for (const auto& z : za) {
    auto rb = b.presentation().rank_of_member(remap(z.set, a.ground(), b.ground()));
    if (!rb || *rb != z.rank) return false;
  }
  return true;
}

struct AmalgamProblem {
  Matroid n1;
  Matroid n2;
  Mask common1 = 0;  // E(n1) n E(n2) in n1's indexing
  Mask common2 = 0;  // the same set in n2's indexing

  static AmalgamProblem make(Matroid n1, Matroid n2) {
    Mask c1 = 0, c2 = 0;
    for (std::size_t i = 0; i < n1.size(); ++i) {
      if (auto j = n2.ground().index_of(n1.ground().label(i))) {
        c1 |= bit(i);
        c2 |= bit(*j);
      }
    }
    if (!same_labeled_matroid(n1.restriction(c1), n2.restriction(c2))) {
      throw usage_error("the two matroids differ on their common elements");
    }
    return {std::move(n1), std::move(n2), c1, c2};
  }
};

enum class AmalgamOutcome { found, none, budget_exceeded };

inline const char* outcome_name(AmalgamOutcome o) {
  switch (o) {
    case AmalgamOutcome::found: return "found";
    case AmalgamOutcome::none: return "none";
    case AmalgamOutcome::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

struct AmalgamResult {
  AmalgamOutcome outcome = AmalgamOutcome::none;
  std::optional<Matroid> amalgam;
  std::uint64_t explored = 0;
};

inline constexpr std::uint64_t kDefaultAmalgamBudget = 1'000'000;

/// Depth-first search over chains of single-element extensions of n1 by the
/// elements of E(n2) - E(n1), in n2's order. At each step only modular cuts
/// consistent with n2 on the elements placed so far are explored: for every
/// flat F of n2 restricted to those elements, cl(F) must be in the cut iff
/// the new element lies in cl_{n2}(F). Any amalgam restricts to such a
/// chain, so the search is complete.
inline AmalgamResult has_amalgam(const AmalgamProblem& p, std::uint64_t budget = kDefaultAmalgamBudget) {
  const GroundSet& g2 = p.n2.ground();
  std::vector<std::string> fresh;
  for (const auto& l : g2.labels()) {
    if (!p.n1.ground().contains(l)) fresh.push_back(l);
  }
  AmalgamResult res;
  std::function<bool(const Matroid&, std::size_t)> dfs = [&](const Matroid& cur, std::size_t k) {
    if (k == fresh.size()) {
      const Mask in_n2 = remap(g2.full(), g2, cur.ground());
      if (!same_labeled_matroid(cur.restriction(in_n2), p.n2) ||
          !same_labeled_matroid(cur.restriction(p.n1.full()), p.n1)) {
        throw std::logic_error("amalgam search produced a matroid that does not restrict correctly");
      }
      res.amalgam = cur;
      return true;
    }
    const std::size_t e2 = g2.require(fresh[k]);
    Mask placed2 = 0;  // elements of n2 already present in cur
    for (std::size_t i = 0; i < g2.size(); ++i) {
      if (cur.ground().contains(g2.label(i))) placed2 |= bit(i);
    }
    std::vector<Mask> required, forbidden;
    const auto& pres2 = p.n2.presentation();
    for (const auto& level : flats_by_rank(pres2, placed2)) {
      for (Mask f : level) {
        const Mask target = cur.closure(remap(f, g2, cur.ground()));
        const bool spans = pres2.rank_of(f | bit(e2)) == pres2.rank_of(f);
        (spans ? required : forbidden).push_back(target);
      }
    }
    for (auto* v : {&required, &forbidden}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    bool found = false;
    auto status = enumerate_modular_cuts(
        cur, required, forbidden,
        [&](const ModularCut& cut) {
          found = dfs(extend(cur, cut, fresh[k]), k + 1);
          return !found && res.outcome != AmalgamOutcome::budget_exceeded;
        },
        budget, &res.explored);
    if (status == SearchStatus::budget_exceeded) res.outcome = AmalgamOutcome::budget_exceeded;
    return found;
  };
  if (dfs(p.n1, 0)) {
    res.outcome = AmalgamOutcome::found;
  } else if (res.outcome != AmalgamOutcome::budget_exceeded) {
    res.outcome = AmalgamOutcome::none;
  }
  return res;
}

/// A replayable argument that every modular cut of `host` containing the
/// seeds also contains each target. `chain` lists the modular pairs in the
/// order they fire; `derivation` is the route the forced closure found.
struct Certificate {
  std::string kind;
  Matroid host;
  std::vector<Mask> seeds;
  std::vector<Mask> targets;
  std::vector<ForcingStep> chain;
  std::vector<ForcingStep> derivation;
  std::vector<Check> checks;

  bool valid() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
  }

  Json to_json() const {
    const GroundSet& g = host.ground();
    Json j;
    j["kind"] = kind;
    j["valid"] = valid();
    j["seeds"] = sets_json(g, seeds);
    j["targets"] = sets_json(g, targets);
    auto steps = [&](const std::vector<ForcingStep>& v) {
      Json a = Json::array();
      for (const auto& s : v) {
        Json step;
        step["modular_pair"] = Json::array({set_json(g, s.left), set_json(g, s.right)});
        step["forces"] = set_json(g, s.meet);
        a.push_back(step);
      }
      return a;
    };
    j["chain"] = steps(chain);
    j["derivation"] = steps(derivation);
    j["checks"] = Json::array();
    for (const auto& c : checks) j["checks"].push_back(check_to_json(c));
    return j;
  }
};

/// Re-verifies every step: both operands lie above a seed or an earlier
/// meet, they form a modular pair of flats, and `meet` is their
/// intersection. Also requires every target to be above a derived flat.
inline bool replay(const Certificate& c) {
  std::vector<Mask> known = c.seeds;
  auto derived = [&](Mask f) {
    return std::any_of(known.begin(), known.end(), [&](Mask k) { return is_subset(k, f); });
  };
  for (const auto& s : c.chain) {
    if (!derived(s.left) || !derived(s.right)) return false;
    if (s.meet != (s.left & s.right)) return false;
    if (!c.host.is_flat(s.left) || !c.host.is_flat(s.right)) return false;
    if (!is_modular_pair(c.host, s.left, s.right)) return false;
    known.push_back(s.meet);
  }
  return std::all_of(c.targets.begin(), c.targets.end(), derived);
}

namespace detail {

inline void add_check(std::vector<Check>& checks, std::string name, Json expected, Json actual) {
  const bool ok = expected == actual;
  checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
}

inline void require_valid(const Certificate& c) {
  if (c.valid()) return;
  std::string msg = c.kind + " certificate failed:";
  for (const auto& ch : c.checks) {
    if (!ch.ok) msg += " [" + ch.name + ": expected " + ch.expected.dump() + ", got " + ch.actual.dump() + "]";
  }
  throw certificate_error(msg);
}

inline void attach_forced_closure(Certificate& c) {
  const auto fc = forced_closure_traced(c.host, c.seeds);
  const GroundSet& g = c.host.ground();
  for (Mask t : c.targets) {
    const bool in = fc.cut.contains(t);
    add_check(c.checks, "forced closure of the seeds contains " + g.format(t), true, in);
    if (in) {
      for (const auto& s : fc.derivation(t)) {
        if (std::find(c.derivation.begin(), c.derivation.end(), s) == c.derivation.end()) {
          c.derivation.push_back(s);
        }
      }
    }
  }
  add_check(c.checks, "chain replays", true, replay(c));
}

}  // namespace detail

struct PlanesCertificate {
  PlanesConstruction construction;
  MpExtension mp;
  Certificate certificate;
  int rank_bound = 0;  // every admissible N' has r(P) <= rank_bound
  std::uint64_t chains_examined = 0;
  bool chains_exhaustive = false;
  std::optional<AmalgamResult> search;
};

struct PlanesOptions {
  /// Run has_amalgam as a cross-check when |E(N) u P| is at most this.
  std::size_t amalgam_max_elements = 12;
  /// Search-node budget for enumerating admissible extension chains.
  std::uint64_t chain_budget = 20'000;
};

/// Certifies that N (from build_n_planes) and M_P (from build_m_p) have no
/// amalgam. The modular pairs (H1 u A, H2 u A) and (H1 u B, H2 u B) force A
/// and B into every cut containing H1 and H2. For any N' on E(N) u P with
/// P in cl(H1) n cl(H2), deleting P - p leaves a single-element extension
/// of N, so each p lies in cl(A) n cl(B). Semimodularity then bounds r(P)
/// by 2(r-1) - (r+1) = r-3 < r-2. For r = 3 the pair (A, B) is modular too
/// and the point is forced to be a loop.
///
/// Extension chains are also enumerated directly, up to `chain_budget`
/// search nodes, and the bound is checked on each chain reached.
inline PlanesCertificate verify_nonsticky_planes(const Matroid& m, Mask h, Mask h2,
                                                 const PlanesOptions& opt = {}) {
  const int r = m.rank();
  if (r != 3 && r != 4) throw hypothesis_error("certificates are implemented for rank 3 and 4");
  PlanesConstruction built = build_n_planes(m, h, h2);
  Certificate blank{"nonsticky-planes", built.n, {built.h1, built.h2c}, {}, {}, {}, {}};
  PlanesCertificate out{std::move(built), build_m_p(m, h, h2), std::move(blank), 0, 0, false, std::nullopt};
  const auto& c = out.construction;
  const Matroid& n = c.n;
  const GroundSet& g = n.ground();
  Certificate& cert = out.certificate;

  const Mask p = out.mp.points;
  const Matroid& mp = out.mp.matroid;
  detail::add_check(cert.checks, "|P| = r-2", r - 2, popcount(p));
  detail::add_check(cert.checks, "r_{M_P}(P) = r-2", r - 2, mp.rank_of(p));
  detail::add_check(cert.checks, "P in cl(H) n cl(H')", true,
                    is_subset(p, mp.closure(h) & mp.closure(h2)));

  cert.chain.push_back({c.h1 | c.a_set, c.h2c | c.a_set, (c.h1 | c.a_set) & (c.h2c | c.a_set)});
  cert.chain.push_back({c.h1 | c.b_set, c.h2c | c.b_set, (c.h1 | c.b_set) & (c.h2c | c.b_set)});
  detail::add_check(cert.checks, "(H1 u A) n (H2 u A) = A", set_json(g, c.a_set), set_json(g, cert.chain[0].meet));
  detail::add_check(cert.checks, "(H1 u B) n (H2 u B) = B", set_json(g, c.b_set), set_json(g, cert.chain[1].meet));
  cert.targets = {c.a_set, c.b_set};
  if (r == 3) {
    cert.chain.push_back({c.a_set, c.b_set, c.a_set & c.b_set});
    cert.targets.push_back(n.closure(0));
  }

  const int ra = n.rank_of(c.a_set), rb = n.rank_of(c.b_set), rab = n.rank_of(c.a_set | c.b_set);
  detail::add_check(cert.checks, "r_N(A) = r-1", r - 1, ra);
  detail::add_check(cert.checks, "r_N(B) = r-1", r - 1, rb);
  detail::add_check(cert.checks, "r_N(A u B) = r+1", r + 1, rab);
  out.rank_bound = ra + rb - rab;
  detail::add_check(cert.checks, "semimodularity: r_N'(P) <= r(A)+r(B)-r(A u B) = r-3", r - 3, out.rank_bound);
  detail::add_check(cert.checks, "bound is below r_{M_P}(P)", true, out.rank_bound < mp.rank_of(p));
  detail::attach_forced_closure(cert);

  // Every chain of extensions N + p1 + ... + p_{r-2} with each new point in
  // cl(H1) n cl(H2): check the conclusion directly.
  bool chains_ok = true;
  std::uint64_t nodes = 0;
  std::function<bool(const Matroid&, int, Mask)> walk = [&](const Matroid& cur, int i, Mask pts) {
    if (i > r - 2) {
      ++out.chains_examined;
      const bool in_ab = is_subset(pts, cur.closure(c.a_set) & cur.closure(c.b_set));
      if (!in_ab || cur.rank_of(pts) > out.rank_bound) chains_ok = false;
      return chains_ok;
    }
    const std::vector<Mask> req{cur.closure(c.h1), cur.closure(c.h2c)};
    const Mask next = bit(cur.size());
    auto st = enumerate_modular_cuts(
        cur, req, {},
        [&](const ModularCut& cut) {
          return walk(extend(cur, cut, "p" + std::to_string(i)), i + 1, pts | next);
        },
        opt.chain_budget, &nodes);
    return st == SearchStatus::complete && chains_ok;
  };
  out.chains_exhaustive = walk(n, 1, 0);
  detail::add_check(cert.checks, "every admissible extension chain examined has r(P) <= bound", true, chains_ok);

  const std::size_t total = n.size() + static_cast<std::size_t>(popcount(p));
  if (total <= opt.amalgam_max_elements) {
    out.search = has_amalgam(AmalgamProblem::make(n, mp));
    detail::add_check(cert.checks, "amalgam search agrees (no amalgam)", "none", outcome_name(out.search->outcome));
  }
  detail::require_valid(cert);
  return out;
}

inline PlanesCertificate verify_nonsticky_planes(const Matroid& m, const ElementSet& h,
                                                 const ElementSet& h2, const PlanesOptions& opt = {}) {
  return verify_nonsticky_planes(m, m.own(h), m.own(h2), opt);
}

/// Certifies that in every single-element extension of N placing q in
/// cl(l) n cl(H'), q is a loop: (D1 u l, D1 u H') forces D1, likewise D2,
/// (D1, D2) forces A, and (A, l) forces cl(empty).
inline Certificate verify_loop_argument(const IpConstruction& c) {
  const Matroid& n = c.n;
  const GroundSet& g = n.ground();
  Certificate cert{"loop-argument", n, {c.line, c.h_prime}, {n.closure(0)}, {}, {}, {}};
  cert.chain = {
      {c.d1 | c.line, c.d1 | c.h_prime, (c.d1 | c.line) & (c.d1 | c.h_prime)},
      {c.d2 | c.line, c.d2 | c.h_prime, (c.d2 | c.line) & (c.d2 | c.h_prime)},
      {c.d1, c.d2, c.d1 & c.d2},
      {c.a_set, c.line, c.a_set & c.line},
  };
  detail::add_check(cert.checks, "N is loopless", Json::array(), set_json(g, n.loop_bits()));
  detail::add_check(cert.checks, "step 1 forces D1", set_json(g, c.d1), set_json(g, cert.chain[0].meet));
  detail::add_check(cert.checks, "step 2 forces D2", set_json(g, c.d2), set_json(g, cert.chain[1].meet));
  detail::add_check(cert.checks, "step 3 forces A", set_json(g, c.a_set), set_json(g, cert.chain[2].meet));
  detail::add_check(cert.checks, "step 4 forces cl(empty)", set_json(g, n.closure(0)),
                    set_json(g, cert.chain[3].meet));
  detail::add_check(cert.checks, "r(N) = r(M)+1", c.base.rank() + 1, n.rank());
  detail::attach_forced_closure(cert);
  detail::require_valid(cert);
  return cert;
}

}  // namespace cfm

#endif  // CFM_AMALGAM_HPP_
