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

#ifndef CFM_REPORT_HPP_
#define CFM_REPORT_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cfm/element_set.hpp"

namespace cfm {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, error };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "error";
}

struct Check {
  std::string name;
  Json expected;
  Json actual;
  bool ok = false;
};

inline Json check_to_json(const Check& c) {
  Json j;
  j["name"] = c.name;
  j["expected"] = c.expected;
  j["actual"] = c.actual;
  j["ok"] = c.ok;
  return j;
}

/// Outcome of one command: a list of named checks plus optional result and
/// witness payloads. The status is pass iff every check passed and no error
/// was recorded.
struct Report {
  std::string command;
  std::vector<Check> checks;
  Json result;
  Json witnesses;
  std::optional<std::string> error;

  explicit Report(std::string cmd) : command(std::move(cmd)) {}

  /// Records a check that passes when expected == actual.
  bool expect_eq(std::string name, Json expected, Json actual) {
    const bool ok = expected == actual;
    checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
    return ok;
  }

  bool expect(std::string name, bool ok, Json expected, Json actual) {
    checks.push_back({std::move(name), std::move(expected), std::move(actual), ok});
    return ok;
  }

  void absorb(const std::vector<Check>& more, const std::string& prefix = "") {
    for (auto c : more) {
      c.name = prefix + c.name;
      checks.push_back(std::move(c));
    }
  }

  Status status() const {
    if (error) return Status::error;
    for (const auto& c : checks) {
      if (!c.ok) return Status::fail;
    }
    return Status::pass;
  }
  bool passed() const { return status() == Status::pass; }

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["status"] = status_name(status());
    j["checks"] = Json::array();
    for (const auto& c : checks) j["checks"].push_back(check_to_json(c));
    if (!result.is_null()) j["result"] = result;
    if (!witnesses.is_null()) j["witnesses"] = witnesses;
    if (error) j["error"] = *error;
    return j;
  }
};

/// Sets serialise as label lists in ground-set order.
inline Json set_json(const GroundSet& g, Mask m) { return Json(g.labels_of(m)); }

inline Json sets_json(const GroundSet& g, const std::vector<Mask>& ms) {
  Json j = Json::array();
  for (Mask m : ms) j.push_back(set_json(g, m));
  return j;
}

}  // namespace cfm

#endif  // CFM_REPORT_HPP_
