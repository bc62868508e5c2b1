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

#ifndef CFM_PRESENTATION_HPP_
#define CFM_PRESENTATION_HPP_

#include <algorithm>
#include <climits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfm/element_set.hpp"

namespace cfm {

struct CyclicFlat {
  Mask set = 0;
  int rank = 0;

  friend bool operator==(const CyclicFlat&, const CyclicFlat&) = default;
};

/// A candidate matroid: a ground set together with the sets claimed to be
/// its cyclic flats and their ranks. Entries are kept sorted by set; no
/// axiom is assumed here (see axioms.hpp), so duplicates and negative ranks
/// survive construction and are reported by the validator.
class CyclicFlatPresentation {
 public:
  CyclicFlatPresentation(GroundPtr ground, std::vector<CyclicFlat> flats)
      : ground_(std::move(ground)), flats_(std::move(flats)) {
    if (!ground_) throw usage_error("presentation without a ground set");
    for (const auto& z : flats_) {
      if (!is_subset(z.set, ground_->full())) {
        throw usage_error("cyclic flat has members outside the ground set");
      }
    }
    std::stable_sort(flats_.begin(), flats_.end(), [](const CyclicFlat& a, const CyclicFlat& b) {
      return a.set != b.set ? a.set < b.set : a.rank < b.rank;
    });
  }

  const GroundPtr& ground_ptr() const { return ground_; }
  const GroundSet& ground() const { return *ground_; }
  const std::vector<CyclicFlat>& flats() const { return flats_; }
  std::size_t size() const { return flats_.size(); }

  std::optional<int> rank_of_member(Mask set) const {
    auto it = std::lower_bound(flats_.begin(), flats_.end(), set,
                               [](const CyclicFlat& z, Mask s) { return z.set < s; });
    if (it == flats_.end() || it->set != set) return std::nullopt;
    return it->rank;
  }
  bool has_member(Mask set) const { return rank_of_member(set).has_value(); }

  /// r(X) = min over listed Z of r(Z) + |X - Z|. This is the matroid rank
  /// exactly when the presentation satisfies the cyclic-flat axioms.
  int operator()(Mask x) const { return rank_of(x); }
  int rank_of(Mask x) const {
    int best = INT_MAX;
    for (const auto& z : flats_) {
      best = std::min(best, z.rank + popcount(x & ~z.set));
    }
    return best;
  }

  friend bool operator==(const CyclicFlatPresentation& a, const CyclicFlatPresentation& b) {
    return same_universe(a.ground_, b.ground_) && a.flats_ == b.flats_;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& z : flats_) {
      if (!s.empty()) s += ' ';
      s += ground_->format(z.set) + ":" + std::to_string(z.rank);
    }
    return s;
  }

 private:
  GroundPtr ground_;
  std::vector<CyclicFlat> flats_;
};

}  // namespace cfm

#endif  // CFM_PRESENTATION_HPP_
