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

#ifndef CFM_ELEMENT_SET_HPP_
#define CFM_ELEMENT_SET_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cfm {

/// Raw subset of a ground set: bit i stands for the element with index i.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

/// Thrown when an operation is called with arguments that violate its
/// contract (foreign ground set, non-flat where a flat is required, ...).
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when the mathematical hypotheses of a construction do not hold.
class hypothesis_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline int popcount(Mask m) { return std::popcount(m); }

inline constexpr Mask full_mask(std::size_t n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

inline constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

/// Calls f(i) for every set bit, lowest first.
template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

inline std::vector<std::size_t> bit_indices(Mask m) {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  for_each_bit(m, [&](std::size_t i) { out.push_back(i); });
  return out;
}

/// Packs the bits of `m` that lie inside `within` into the low bits, in
/// index order. Inverse of `expand_bits` on subsets of `within`.
inline Mask compress_bits(Mask m, Mask within) {
  Mask out = 0;
  std::size_t k = 0;
  for_each_bit(within, [&](std::size_t i) {
    if (m & bit(i)) out |= bit(k);
    ++k;
  });
  return out;
}

inline Mask expand_bits(Mask packed, Mask within) {
  Mask out = 0;
  std::size_t k = 0;
  for_each_bit(within, [&](std::size_t i) {
    if (packed & bit(k)) out |= bit(i);
    ++k;
  });
  return out;
}

/// An ordered list of distinct element labels. The order fixes the index
/// of every element for the lifetime of the object.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > kMaxElements) {
      throw usage_error("ground set has " + std::to_string(labels_.size()) +
                        " elements; at most 64 are supported");
    }
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!index_.emplace(labels_[i], i).second) {
        throw usage_error("duplicate element label '" + labels_[i] + "'");
      }
    }
  }

  std::size_t size() const { return labels_.size(); }
  Mask full() const { return full_mask(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t require(std::string_view label) const {
    auto i = index_of(label);
    if (!i) throw usage_error("unknown element label '" + std::string(label) + "'");
    return *i;
  }

  bool contains(std::string_view label) const { return index_of(label).has_value(); }

  template <class Range>
  Mask mask_of(const Range& labels) const {
    Mask m = 0;
    for (const auto& l : labels) m |= bit(require(l));
    return m;
  }
  Mask mask_of(std::initializer_list<std::string_view> labels) const {
    Mask m = 0;
    for (auto l : labels) m |= bit(require(l));
    return m;
  }

  std::vector<std::string> labels_of(Mask m) const {
    std::vector<std::string> out;
    for_each_bit(m, [&](std::size_t i) { out.push_back(labels_.at(i)); });
    return out;
  }

  /// Renders a subset as "{a,b,c}" in index order.
  std::string format(Mask m) const {
    std::string s = "{";
    bool first = true;
    for_each_bit(m, [&](std::size_t i) {
      if (!first) s += ',';
      s += labels_.at(i);
      first = false;
    });
    return s + "}";
  }

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

using GroundPtr = std::shared_ptr<const GroundSet>;

inline GroundPtr make_ground(std::vector<std::string> labels) {
  return std::make_shared<const GroundSet>(std::move(labels));
}

inline bool same_universe(const GroundPtr& a, const GroundPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// A subset of a particular ground set.
class ElementSet {
 public:
  ElementSet(GroundPtr universe, Mask bits) : universe_(std::move(universe)), bits_(bits) {
    if (!universe_) throw usage_error("element set without a ground set");
    if (!is_subset(bits_, universe_->full())) {
      throw usage_error("element set has members outside its ground set");
    }
  }
  explicit ElementSet(GroundPtr universe) : ElementSet(std::move(universe), 0) {}

  static ElementSet of(GroundPtr universe, std::initializer_list<std::string_view> labels) {
    Mask m = universe->mask_of(labels);
    return ElementSet(std::move(universe), m);
  }
  template <class Range>
  static ElementSet of_labels(GroundPtr universe, const Range& labels) {
    Mask m = universe->mask_of(labels);
    return ElementSet(std::move(universe), m);
  }

  Mask bits() const { return bits_; }
  const GroundPtr& universe() const { return universe_; }
  std::size_t size() const { return static_cast<std::size_t>(popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  bool contains(std::size_t i) const { return i < 64 && (bits_ & bit(i)) != 0; }
  bool contains(std::string_view label) const {
    auto i = universe_->index_of(label);
    return i && contains(*i);
  }
  bool subset_of(const ElementSet& o) const {
    check(o);
    return is_subset(bits_, o.bits_);
  }

  std::vector<std::string> labels() const { return universe_->labels_of(bits_); }
  std::string to_string() const { return universe_->format(bits_); }

  ElementSet complement() const { return {universe_, universe_->full() & ~bits_}; }

  friend ElementSet operator|(const ElementSet& a, const ElementSet& b) {
    a.check(b);
    return {a.universe_, a.bits_ | b.bits_};
  }
  friend ElementSet operator&(const ElementSet& a, const ElementSet& b) {
    a.check(b);
    return {a.universe_, a.bits_ & b.bits_};
  }
  friend ElementSet operator-(const ElementSet& a, const ElementSet& b) {
    a.check(b);
    return {a.universe_, a.bits_ & ~b.bits_};
  }
  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.bits_ == b.bits_ && same_universe(a.universe_, b.universe_);
  }
  /// Canonical order: by bitmask value.
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    return a.bits_ <=> b.bits_;
  }

  /// Throws unless `o` lives on the same ground set.
  void check(const ElementSet& o) const {
    if (!same_universe(universe_, o.universe_)) {
      throw usage_error("element sets belong to different ground sets");
    }
  }

 private:
  GroundPtr universe_;
  Mask bits_;
};

}  // namespace cfm

#endif  // CFM_ELEMENT_SET_HPP_
