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

// JSON files: "cyclic-flats-v1" for matroids, "exact-matrix-v1" for
// matrices. Reading never validates the cyclic-flat axioms; callers decide.

#ifndef CFM_IO_HPP_
#define CFM_IO_HPP_

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfm/linear.hpp"
#include "cfm/matroid.hpp"
#include "cfm/presentation.hpp"
#include "cfm/report.hpp"

namespace cfm {

inline constexpr const char* kMatroidFormat = "cyclic-flats-v1";
inline constexpr const char* kMatrixFormat = "exact-matrix-v1";

/// Input that is not well-formed JSON or does not follow a file format.
class format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw format_error(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw format_error(where + ": missing field \"" + key + "\"");
  return *it;
}

inline std::vector<std::string> string_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw format_error(where + ": expected a list of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw format_error(where + ": expected a list of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline Json parse_text(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw format_error(where + ": " + e.what());
  }
}

inline void check_format(const Json& j, const char* expected, const std::string& where) {
  const Json& f = field(j, "format", where);
  if (!f.is_string() || f.get<std::string>() != expected) {
    throw format_error(where + ": format must be \"" + std::string(expected) + "\"");
  }
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw format_error(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw usage_error(path + ": cannot write file");
  out << text;
}

inline CyclicFlatPresentation presentation_from_json(const Json& j, const std::string& where = "input") {
  detail::check_format(j, kMatroidFormat, where);
  GroundPtr g;
  try {
    g = make_ground(detail::string_list(detail::field(j, "ground_set", where), where + ".ground_set"));
  } catch (const usage_error& e) {
    throw format_error(where + ".ground_set: " + e.what());
  }
  const Json& zs = detail::field(j, "cyclic_flats", where);
  if (!zs.is_array()) throw format_error(where + ".cyclic_flats: expected a list");
  std::vector<CyclicFlat> flats;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    const std::string at = where + ".cyclic_flats[" + std::to_string(i) + "]";
    const auto labels = detail::string_list(detail::field(zs[i], "set", at), at + ".set");
    const Json& rk = detail::field(zs[i], "rank", at);
    if (!rk.is_number_integer()) throw format_error(at + ".rank: expected an integer");
    Mask set = 0;
    for (const auto& l : labels) {
      auto idx = g->index_of(l);
      if (!idx) throw format_error(at + ".set: unknown label \"" + l + "\"");
      set |= bit(*idx);
    }
    flats.push_back({set, rk.get<int>()});
  }
  return CyclicFlatPresentation(g, std::move(flats));
}

inline CyclicFlatPresentation parse_presentation(const std::string& text, const std::string& where = "input") {
  return presentation_from_json(detail::parse_text(text, where), where);
}

inline CyclicFlatPresentation read_presentation(const std::string& path) {
  return parse_presentation(read_file(path), path);
}

/// Canonical form: cyclic flats sorted by mask, sets in ground-set order.
inline Json presentation_to_json(const CyclicFlatPresentation& p) {
  const GroundSet& g = p.ground();
  Json j;
  j["format"] = kMatroidFormat;
  j["ground_set"] = g.labels();
  j["cyclic_flats"] = Json::array();
  for (const auto& z : p.flats()) {
    Json e;
    e["set"] = set_json(g, z.set);
    e["rank"] = z.rank;
    j["cyclic_flats"].push_back(e);
  }
  return j;
}

inline Json matroid_to_json(const Matroid& m) { return presentation_to_json(m.presentation()); }

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

inline ExactMatrix matrix_from_json(const Json& j, const std::string& where = "input") {
  detail::check_format(j, kMatrixFormat, where);
  const Json& fj = detail::field(j, "field", where);
  if (!fj.is_string()) throw format_error(where + ".field: expected a string");
  const std::string fs = fj.get<std::string>();
  Field field = Field::rationals();
  if (fs != "Q") {
    if (fs.size() < 5 || fs.rfind("GF(", 0) != 0 || fs.back() != ')') {
      throw format_error(where + ".field: expected \"Q\" or \"GF(p)\"");
    }
    try {
      std::size_t used = 0;
      const std::string digits = fs.substr(3, fs.size() - 4);
      const long p = std::stol(digits, &used);
      if (used != digits.size()) throw std::invalid_argument("trailing characters");
      field = Field::prime(p);
    } catch (const std::exception& e) {
      throw format_error(where + ".field: " + e.what());
    }
  }
  const Json& cols = detail::field(j, "columns", where);
  if (!cols.is_array() || cols.empty()) throw format_error(where + ".columns: expected a nonempty list");
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> entries;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const std::string at = where + ".columns[" + std::to_string(i) + "]";
    const Json& lj = detail::field(cols[i], "label", at);
    if (!lj.is_string()) throw format_error(at + ".label: expected a string");
    labels.push_back(lj.get<std::string>());
    std::vector<Rational> col;
    for (const auto& s : detail::string_list(detail::field(cols[i], "entries", at), at + ".entries")) {
      try {
        col.push_back(parse_rational(s));
      } catch (const std::exception& e) {
        throw format_error(at + ".entries: " + e.what());
      }
    }
    entries.push_back(std::move(col));
  }
  const std::size_t rows = entries.front().size();
  try {
    ExactMatrix a(field, rows, labels, std::move(entries));
    if (auto it = j.find("groups"); it != j.end()) {
      if (!it->is_object()) throw format_error(where + ".groups: expected an object");
      for (const auto& [name, members] : it->items()) {
        a.set_group(name, detail::string_list(members, where + ".groups." + name));
      }
    }
    return a;
  } catch (const usage_error& e) {
    throw format_error(where + ": " + e.what());
  }
}

inline ExactMatrix parse_matrix(const std::string& text, const std::string& where = "input") {
  return matrix_from_json(detail::parse_text(text, where), where);
}

inline ExactMatrix read_matrix(const std::string& path) { return parse_matrix(read_file(path), path); }

inline Json matrix_to_json(const ExactMatrix& a) {
  Json j;
  j["format"] = kMatrixFormat;
  j["field"] = a.field().name();
  j["columns"] = Json::array();
  for (std::size_t c = 0; c < a.cols(); ++c) {
    Json col;
    col["label"] = a.labels()[c];
    Json es = Json::array();
    for (const auto& x : a.column(c)) es.push_back(format_rational(x));
    col["entries"] = es;
    j["columns"].push_back(col);
  }
  if (!a.groups().empty()) {
    Json gs = Json::object();
    for (const auto& [name, members] : a.groups()) gs[name] = members;
    j["groups"] = gs;
  }
  return j;
}

}  // namespace cfm

#endif  // CFM_IO_HPP_
