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

// Command-line front end. Every command prints one JSON report (or plain
// text with --text). Exit codes: 0 when the report passes, 1 when a check
// fails or the computation raises, 2 for malformed input or bad usage.

#ifndef CFM_CLI_HPP_
#define CFM_CLI_HPP_

#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cfm/amalgam.hpp"
#include "cfm/axioms.hpp"
#include "cfm/io.hpp"
#include "cfm/linear.hpp"
#include "cfm/matroid.hpp"
#include "cfm/modular_cut.hpp"
#include "cfm/properties.hpp"
#include "cfm/report.hpp"
#include "cfm/verify.hpp"

namespace cfm {

/// A command-line argument that does not make sense for the input.
class argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace cli {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

/// "a,b,c" as a subset of g; the empty string is the empty set.
inline Mask parse_set(const GroundSet& g, const std::string& text) {
  Mask m = 0;
  if (trim(text).empty()) return m;
  for (const auto& l : split(text, ',')) {
    auto i = g.index_of(l);
    if (!i) throw argument_error("unknown element '" + l + "'");
    m |= bit(*i);
  }
  return m;
}

/// "a,b;c,d" as a list of subsets.
inline std::vector<Mask> parse_sets(const GroundSet& g, const std::string& text) {
  std::vector<Mask> out;
  for (const auto& part : split(text, ';')) out.push_back(parse_set(g, part));
  return out;
}

inline Matroid load_matroid(const std::string& path) {
  return Matroid::from_presentation(read_presentation(path));
}

inline Json flat_list_json(const Matroid& m, const std::vector<Mask>& flats) {
  Json a = Json::array();
  for (Mask f : flats) a.push_back({{"set", set_json(m.ground(), f)}, {"rank", m.rank_of(f)}});
  return a;
}

inline Json steps_json(const GroundSet& g, const std::vector<ForcingStep>& steps) {
  Json a = Json::array();
  for (const auto& s : steps) {
    a.push_back({{"modular_pair", Json::array({set_json(g, s.left), set_json(g, s.right)})}, {"forces", set_json(g, s.meet)}});
  }
  return a;
}

inline void render_text(const Report& rep, std::ostream& out) {
  out << rep.command << ": " << status_name(rep.status()) << "\n";
  if (rep.error) out << "  error: " << *rep.error << "\n";
  for (const auto& c : rep.checks) {
    out << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << ": " << c.actual.dump();
    if (!c.ok) out << " (expected " << c.expected.dump() << ")";
    out << "\n";
  }
  if (!rep.result.is_null()) {
    if (rep.result.is_object()) {
      for (const auto& [k, v] : rep.result.items()) out << "  " << k << " = " << v.dump() << "\n";
    } else {
      out << "  result = " << rep.result.dump() << "\n";
    }
  }
}

inline int exit_code(const Report& rep) { return rep.passed() ? 0 : 1; }

// ---- commands --------------------------------------------------------------

inline Report cmd_check_axioms(const std::string& file) {
  Report rep("check-axioms");
  const auto p = read_presentation(file);
  const auto v = check_z_axioms(p);
  Json list = Json::array();
  for (const auto& x : v) {
    Json e{{"axiom", axiom_name(x.axiom)}, {"x", set_json(p.ground(), x.x)}};
    if (x.y) e["y"] = set_json(p.ground(), *x.y);
    e["detail"] = x.detail;
    list.push_back(e);
  }
  rep.expect_eq("cyclic-flat axioms", Json::array(), list);
  rep.result = {{"valid", v.empty()}, {"violations", list}};
  return rep;
}

inline Report cmd_rank(const std::string& file, const std::string& set) {
  Report rep("rank");
  const Matroid m = load_matroid(file);
  const Mask x = parse_set(m.ground(), set);
  rep.result = {{"set", set_json(m.ground(), x)}, {"rank", m.rank_of(x)}};
  return rep;
}

inline Report cmd_closure(const std::string& file, const std::string& set) {
  Report rep("closure");
  const Matroid m = load_matroid(file);
  const Mask x = parse_set(m.ground(), set);
  const Mask cl = m.closure(x);
  rep.result = {{"set", set_json(m.ground(), x)}, {"closure", set_json(m.ground(), cl)}, {"rank", m.rank_of(cl)}};
  return rep;
}

inline Report cmd_flats(const std::string& file, std::optional<int> rank) {
  Report rep("flats");
  const Matroid m = load_matroid(file);
  std::vector<Mask> flats;
  if (rank) {
    if (*rank < 0 || *rank > m.rank()) throw argument_error("rank out of range");
    flats = m.flat_masks(*rank);
  } else {
    for (int k = 0; k <= m.rank(); ++k) {
      for (Mask f : m.flat_masks(k)) flats.push_back(f);
    }
  }
  rep.result = {{"count", flats.size()}, {"flats", flat_list_json(m, flats)}};
  return rep;
}

inline Report cmd_circuits(const std::string& file) {
  Report rep("circuits");
  const Matroid m = load_matroid(file);
  const auto& cs = m.circuit_masks();
  rep.result = {{"count", cs.size()}, {"circuits", sets_json(m.ground(), cs)}};
  return rep;
}

inline std::vector<Mask> parse_flat_seeds(const Matroid& m, const std::string& text) {
  auto seeds = parse_sets(m.ground(), text);
  for (Mask s : seeds) {
    if (!m.is_flat(s)) throw argument_error(m.ground().format(s) + " is not a flat");
  }
  return seeds;
}

inline Report cmd_modular_cut_min(const std::string& file, const std::string& flats) {
  Report rep("modular-cut-min");
  const Matroid m = load_matroid(file);
  const auto seeds = parse_flat_seeds(m, flats);
  const auto fc = forced_closure_traced(m, seeds);
  const GroundSet& g = m.ground();
  rep.result = {{"seeds", sets_json(g, seeds)},
                {"minimal_members", sets_json(g, fc.cut.minimal_members())},
                {"members", sets_json(g, fc.cut.members())},
                {"contains_closure_of_empty", fc.cut.contains(m.closure(0))},
                {"forcing_steps", steps_json(g, fc.steps)}};
  return rep;
}

inline Report cmd_extend(const std::string& file, const std::string& flats, const std::string& label,
                         const std::string& out_path) {
  Report rep("extend");
  const Matroid m = load_matroid(file);
  if (m.ground().contains(label)) throw argument_error("label '" + label + "' is already in the ground set");
  const auto seeds = parse_flat_seeds(m, flats);
  const ModularCut cut = forced_closure(m, seeds);
  const Matroid n = extend(m, cut, label);
  rep.expect_eq("deleting the new element recovers the input", true, n.deletion(bit(m.size())) == m);
  rep.expect_eq("new element is a loop", cut.contains(m.closure(0)), n.rank_of(bit(m.size())) == 0);
  rep.result = {{"modular_cut", sets_json(m.ground(), cut.minimal_members())}, {"matroid", matroid_to_json(n)}};
  if (!out_path.empty()) write_file(out_path, dump_json(matroid_to_json(n)));
  return rep;
}

inline Report cmd_from_matrix(const std::string& file, const std::string& out_path) {
  Report rep("from-matrix");
  const ExactMatrix a = read_matrix(file);
  const Matroid m = column_matroid(a);
  rep.result = {{"field", a.field().name()}, {"rank", m.rank()}, {"matroid", matroid_to_json(m)}};
  if (!out_path.empty()) write_file(out_path, dump_json(matroid_to_json(m)));
  return rep;
}

inline Report cmd_bundle(const std::string& file) {
  Report rep("bundle");
  const Matroid m = load_matroid(file);
  const auto q = find_bundle_counterexample(m);
  rep.expect_eq("bundle condition holds", true, !q.has_value());
  rep.result = {{"holds", !q.has_value()}};
  if (q) rep.witnesses = {{"quadruple", detail::quadruple_json(m.ground(), *q)}};
  return rep;
}

inline Report cmd_ip(const std::string& file) {
  Report rep("ip");
  const Matroid m = load_matroid(file);
  const GroundSet& g = m.ground();
  Json witnesses = Json::array();
  Json failing = Json::array();
  std::size_t checked = 0;
  for (auto [x, y] : non_modular_flat_pairs(m)) {
    ++checked;
    const auto w = intersection_property_witness(m, x, y);
    Json pair = Json::array({set_json(g, x), set_json(g, y)});
    if (w) {
      witnesses.push_back({{"pair", pair}, {"cut_minimal_members", sets_json(g, w->minimal_members())}});
    } else {
      failing.push_back(pair);
    }
  }
  rep.expect_eq("intersection property holds", true, failing.empty());
  rep.result = {{"holds", failing.empty()}, {"non_modular_pairs", checked}, {"pairs_without_witness", failing}};
  rep.witnesses = witnesses;
  return rep;
}

inline Report cmd_amalgam(const std::string& f1, const std::string& f2, std::uint64_t budget) {
  Report rep("amalgam");
  const auto problem = AmalgamProblem::make(load_matroid(f1), load_matroid(f2));
  const auto res = has_amalgam(problem, budget);
  if (res.outcome == AmalgamOutcome::budget_exceeded) {
    rep.error = "search budget of " + std::to_string(budget) + " nodes exceeded";
  }
  rep.expect_eq("amalgam exists", true, res.outcome == AmalgamOutcome::found);
  rep.result = {{"outcome", outcome_name(res.outcome)}, {"explored", res.explored}};
  if (res.amalgam) rep.result["amalgam"] = matroid_to_json(*res.amalgam);
  return rep;
}

inline Report cmd_verify_all() {
  Report rep("paper-verify");
  Json reports = Json::array();
  for (const auto& c : verification_checks()) {
    const Report r = run_verification_check(c.name);
    rep.expect_eq(c.name, "pass", status_name(r.status()));
    reports.push_back(r.to_json());
  }
  rep.result = {{"reports", reports}};
  return rep;
}

}  // namespace cli

/// Runs one command line (args excludes the program name) and returns the
/// exit code.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroids as cyclic-flat presentations: queries, extensions and verification"};
  app.require_subcommand(1);
  bool text = false;
  app.add_flag("--text", text, "Plain-text output instead of JSON");
  app.fallthrough();

  std::string file, file2, set, flats, label, out_path, check;
  std::optional<int> rank;
  std::uint64_t budget = kDefaultAmalgamBudget;
  bool all = false;
  std::function<Report()> action;

  auto* sc = app.add_subcommand("check-axioms", "Check the cyclic-flat axioms of a matroid file");
  sc->add_option("file", file)->required();
  sc->callback([&] { action = [&] { return cli::cmd_check_axioms(file); }; });

  sc = app.add_subcommand("rank", "Rank of a set");
  sc->add_option("file", file)->required();
  sc->add_option("--set", set, "Comma-separated labels")->required();
  sc->callback([&] { action = [&] { return cli::cmd_rank(file, set); }; });

  sc = app.add_subcommand("closure", "Closure of a set");
  sc->add_option("file", file)->required();
  sc->add_option("--set", set, "Comma-separated labels")->required();
  sc->callback([&] { action = [&] { return cli::cmd_closure(file, set); }; });

  sc = app.add_subcommand("flats", "List flats, optionally of one rank");
  sc->add_option("file", file)->required();
  sc->add_option("--rank", rank);
  sc->callback([&] { action = [&] { return cli::cmd_flats(file, rank); }; });

  sc = app.add_subcommand("circuits", "List circuits");
  sc->add_option("file", file)->required();
  sc->callback([&] { action = [&] { return cli::cmd_circuits(file); }; });

  sc = app.add_subcommand("modular-cut-min", "Least modular cut containing the given flats");
  sc->add_option("file", file)->required();
  sc->add_option("--flats", flats, "Flats separated by ';', elements by ','")->required();
  sc->callback([&] { action = [&] { return cli::cmd_modular_cut_min(file, flats); }; });

  sc = app.add_subcommand("extend", "Single-element extension by the least cut containing the flats");
  sc->add_option("file", file)->required();
  sc->add_option("--flats", flats, "Flats separated by ';', elements by ','")->required();
  sc->add_option("--label", label, "Label of the new element")->required();
  sc->add_option("-o,--output", out_path, "Write the extension to this matroid file");
  sc->callback([&] { action = [&] { return cli::cmd_extend(file, flats, label, out_path); }; });

  sc = app.add_subcommand("from-matrix", "Column matroid of an exact matrix file");
  sc->add_option("file", file)->required();
  sc->add_option("-o,--output", out_path, "Write the matroid file");
  sc->callback([&] { action = [&] { return cli::cmd_from_matrix(file, out_path); }; });

  sc = app.add_subcommand("bundle", "Bundle condition of a rank-4 matroid");
  sc->add_option("file", file)->required();
  sc->callback([&] { action = [&] { return cli::cmd_bundle(file); }; });

  sc = app.add_subcommand("ip", "Intersection property");
  sc->add_option("file", file)->required();
  sc->callback([&] { action = [&] { return cli::cmd_ip(file); }; });

  sc = app.add_subcommand("amalgam", "Search for an amalgam of two matroids");
  sc->add_option("file1", file)->required();
  sc->add_option("file2", file2)->required();
  sc->add_option("--budget", budget, "Search node budget")->check(CLI::PositiveNumber);
  sc->callback([&] { action = [&] { return cli::cmd_amalgam(file, file2, budget); }; });

  sc = app.add_subcommand("paper-verify", "Run the built-in verification suite");
  auto* all_opt = sc->add_flag("--all", all, "Run every check");
  std::vector<std::string> names;
  for (const auto& c : verification_checks()) names.push_back(c.name);
  auto* check_opt = sc->add_option("--check", check, "Run one check")->check(CLI::IsMember(names));
  all_opt->excludes(check_opt);
  sc->callback([&] {
    action = [&] { return check.empty() ? cli::cmd_verify_all() : run_verification_check(check); };
  });

  std::vector<std::string> argv_store{"cfm"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Report rep("");
  try {
    rep = action();
  } catch (const format_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const argument_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    rep = Report(app.get_subcommands().front()->get_name());
    rep.error = e.what();
  }
  if (text) {
    cli::render_text(rep, out);
  } else {
    out << dump_json(rep.to_json());
  }
  return cli::exit_code(rep);
}

}  // namespace cfm

#endif  // CFM_CLI_HPP_
