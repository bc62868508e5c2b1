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

// Column matroids of exact matrices over Q or GF(p).

#ifndef CFM_LINEAR_HPP_
#define CFM_LINEAR_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cfm/element_set.hpp"
#include "cfm/matroid.hpp"
#include "cfm/oracle.hpp"

namespace cfm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// Q when `p == 0`, otherwise GF(p).
struct Field {
  std::int64_t p = 0;

  static Field rationals() { return {0}; }
  static Field prime(std::int64_t p) {
    if (!is_prime(p)) throw usage_error(std::to_string(p) + " is not prime");
    return {p};
  }
  bool is_rational() const { return p == 0; }
  std::string name() const { return p == 0 ? "Q" : "GF(" + std::to_string(p) + ")"; }

  friend bool operator==(const Field&, const Field&) = default;
};

/// Parses "n" or "n/d" with decimal integers.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos) {
      throw usage_error("malformed exact scalar '" + std::string(text) + "'");
    }
    return BigInt(std::string(s.front() == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw usage_error("zero denominator in '" + std::string(text) + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline std::string format_rational(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace detail {

inline std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::int64_t to_residue(const Rational& q, std::int64_t p) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt n = numerator(q) % p;
  BigInt d = denominator(q) % p;
  if (d == 0) throw usage_error("entry has a denominator divisible by " + std::to_string(p));
  std::int64_t ni = n.convert_to<std::int64_t>(), di = d.convert_to<std::int64_t>();
  if (ni < 0) ni += p;
  return ni * mod_pow(di, p - 2, p) % p;
}

}  // namespace detail

/// A matrix with exact entries, stored by column, with distinct column
/// labels and optional named column groups.
class ExactMatrix {
 public:
  ExactMatrix(Field field, std::size_t rows, std::vector<std::string> labels,
              std::vector<std::vector<Rational>> columns)
      : field_(field), rows_(rows), labels_(std::move(labels)), columns_(std::move(columns)) {
    if (!field_.is_rational() && !is_prime(field_.p)) {
      throw usage_error(std::to_string(field_.p) + " is not prime");
    }
    if (labels_.size() != columns_.size()) throw usage_error("label count differs from column count");
    if (columns_.size() > kMaxElements) throw usage_error("more than 64 columns");
    make_ground(labels_);  // rejects duplicate labels
    for (const auto& c : columns_) {
      if (c.size() != rows_) throw usage_error("column length differs from row count");
    }
    if (!field_.is_rational()) {
      residues_.resize(columns_.size());
      for (std::size_t j = 0; j < columns_.size(); ++j) {
        for (const auto& q : columns_[j]) residues_[j].push_back(detail::to_residue(q, field_.p));
      }
    }
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Rational>& column(std::size_t j) const { return columns_.at(j); }
  const std::vector<Rational>& column(std::string_view label) const {
    for (std::size_t j = 0; j < labels_.size(); ++j) {
      if (labels_[j] == label) return columns_[j];
    }
    throw usage_error("no column labelled '" + std::string(label) + "'");
  }

  const std::map<std::string, std::vector<std::string>>& groups() const { return groups_; }
  void set_group(std::string name, std::vector<std::string> members) {
    for (const auto& l : members) column(l);
    groups_[std::move(name)] = std::move(members);
  }

  /// Rank of the columns selected by `cols`, by exact Gaussian elimination.
  int rank_of_columns(Mask cols) const {
    return field_.is_rational() ? rank_rational(cols) : rank_modular(cols);
  }

 private:
  int rank_rational(Mask cols) const {
    std::vector<std::vector<Rational>> a;
    for_each_bit(cols, [&](std::size_t j) { a.push_back(columns_[j]); });
    return eliminate(a, [](const Rational& x) { return x == 0; },
                     [](const Rational& pivot, const Rational& x) { return x / pivot; },
                     [](Rational& target, const Rational& f, const Rational& src) { target -= f * src; });
  }

  int rank_modular(Mask cols) const {
    const std::int64_t p = field_.p;
    std::vector<std::vector<std::int64_t>> a;
    for_each_bit(cols, [&](std::size_t j) { a.push_back(residues_[j]); });
    return eliminate(a, [](std::int64_t x) { return x == 0; },
                     [p](std::int64_t pivot, std::int64_t x) {
                       return x * detail::mod_pow(pivot, p - 2, p) % p;
                     },
                     [p](std::int64_t& target, std::int64_t f, std::int64_t src) {
                       target = ((target - f * src) % p + p) % p;
                     });
  }

  // Row reduction on the transposed system: each vector is one column of
  // the matrix, so the rank is the number of pivots found.
  template <class T, class IsZero, class Ratio, class Axpy>
  int eliminate(std::vector<std::vector<T>>& vecs, IsZero is_zero, Ratio ratio, Axpy axpy) const {
    int rank = 0;
    std::size_t row = 0;
    std::vector<bool> used(vecs.size(), false);
    for (; row < rows_; ++row) {
      std::size_t pivot = vecs.size();
      for (std::size_t v = 0; v < vecs.size(); ++v) {
        if (!used[v] && !is_zero(vecs[v][row])) {
          pivot = v;
          break;
        }
      }
      if (pivot == vecs.size()) continue;
      used[pivot] = true;
      ++rank;
      for (std::size_t v = 0; v < vecs.size(); ++v) {
        if (used[v] || is_zero(vecs[v][row])) continue;
        const T f = ratio(vecs[pivot][row], vecs[v][row]);
        for (std::size_t k = row; k < rows_; ++k) axpy(vecs[v][k], f, vecs[pivot][k]);
      }
    }
    return rank;
  }

  Field field_;
  std::size_t rows_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Rational>> columns_;
  std::vector<std::vector<std::int64_t>> residues_;
  std::map<std::string, std::vector<std::string>> groups_;
};

/// The matroid on the column labels with r(X) = rank of those columns.
inline Matroid column_matroid(const ExactMatrix& a) {
  auto rank = [&a](Mask x) { return a.rank_of_columns(x); };
  return Matroid::from_rank_oracle(make_ground(a.labels()), CachedOracle(rank));
}

/// One representative (first nonzero coordinate 1) of every point of
/// PG(r-1, p), as columns of an r-row matrix over GF(p).
inline ExactMatrix projective_geometry_matrix(int r, std::int64_t p) {
  if (r < 1) throw usage_error("projective geometry needs rank at least 1");
  Field f = Field::prime(p);
  std::int64_t points = 0, power = 1;
  for (int i = 0; i < r; ++i) power *= p;
  points = (power - 1) / (p - 1);
  if (points > static_cast<std::int64_t>(kMaxElements)) {
    throw usage_error("PG(" + std::to_string(r - 1) + "," + std::to_string(p) + ") has " +
                      std::to_string(points) + " points; at most 64 are supported");
  }
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> cols;
  for (std::int64_t code = 0; code < power; ++code) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(r));
    std::int64_t c = code;
    for (int i = r - 1; i >= 0; --i) {
      v[static_cast<std::size_t>(i)] = c % p;
      c /= p;
    }
    std::size_t lead = 0;
    while (lead < v.size() && v[lead] == 0) ++lead;
    if (lead == v.size() || v[lead] != 1) continue;
    std::string label;
    std::vector<Rational> col;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (p >= 10 && i > 0) label += '.';
      label += std::to_string(v[i]);
      col.emplace_back(v[i]);
    }
    labels.push_back(std::move(label));
    cols.push_back(std::move(col));
  }
  return ExactMatrix(f, static_cast<std::size_t>(r), std::move(labels), std::move(cols));
}

/// PG(r-1, p) as a rank-r matroid.
inline Matroid projective_geometry(int r, std::int64_t p) {
  return column_matroid(projective_geometry_matrix(r, p));
}

}  // namespace cfm

#endif  // CFM_LINEAR_HPP_
