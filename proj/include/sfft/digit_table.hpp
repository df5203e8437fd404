// Copyright 2026 The sfft Authors.
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

#ifndef SFFT_DIGIT_TABLE_HPP_
#define SFFT_DIGIT_TABLE_HPP_

// Binary digit tables over Z_n: each index is a row of its bits, least
// significant bit first. A pivot is a bit position where some pair of rows
// first differs; a table is conforming when it has 2^(#pivots) rows.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sfft/error.hpp"
#include "sfft/modulus.hpp"

namespace sfft {

/// Distinct indices in [0, n). Element order is preserved as given.
class IndexSet {
 public:
  IndexSet(Modulus n, std::vector<Index> elements)
      : n_(n), elements_(std::move(elements)) {
    std::unordered_set<Index> seen;
    seen.reserve(elements_.size());
    for (Index e : elements_) {
      if (!n_.contains(e)) {
        throw InvalidInputError("index " + std::to_string(e) +
                                " outside [0, " + std::to_string(n_.value()) +
                                ")");
      }
      if (!seen.insert(e).second) {
        throw InvalidInputError("duplicate index " + std::to_string(e));
      }
    }
  }

  IndexSet(Modulus n, std::initializer_list<Index> elements)
      : IndexSet(n, std::vector<Index>(elements)) {}

  /// Z_n in natural order.
  static IndexSet full(Modulus n) {
    std::vector<Index> all(n.value());
    for (Index i = 0; i < n.value(); ++i) all[i] = i;
    return IndexSet(n, std::move(all));
  }

  const Modulus& modulus() const noexcept { return n_; }
  std::span<const Index> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  Index operator[](std::size_t i) const { return elements_[i]; }

 private:
  Modulus n_;
  std::vector<Index> elements_;
};

/// Sorted, duplicate-free bit positions.
class PivotSet {
 public:
  PivotSet() = default;
  explicit PivotSet(std::vector<unsigned> positions)
      : positions_(std::move(positions)) {
    std::sort(positions_.begin(), positions_.end());
    positions_.erase(std::unique(positions_.begin(), positions_.end()),
                     positions_.end());
  }
  PivotSet(std::initializer_list<unsigned> positions)
      : PivotSet(std::vector<unsigned>(positions)) {}

  std::span<const unsigned> positions() const noexcept { return positions_; }
  const std::vector<unsigned>& vector() const noexcept { return positions_; }
  std::size_t size() const noexcept { return positions_.size(); }
  bool empty() const noexcept { return positions_.empty(); }
  unsigned operator[](std::size_t i) const { return positions_[i]; }
  bool contains(unsigned d) const {
    return std::binary_search(positions_.begin(), positions_.end(), d);
  }

  friend bool operator==(const PivotSet&, const PivotSet&) = default;

 private:
  std::vector<unsigned> positions_;
};

/// Exponent of the largest power of two dividing x; x must be nonzero.
constexpr unsigned two_adic_valuation(Index x) noexcept {
  return static_cast<unsigned>(std::countr_zero(x));
}

/// The log2(n) binary digits of `index`, least significant first.
inline std::vector<std::uint8_t> digits_of(Index index, Index n) {
  const Modulus mod(n);
  if (!mod.contains(index)) {
    throw InvalidInputError("index " + std::to_string(index) +
                            " outside [0, " + std::to_string(n) + ")");
  }
  std::vector<std::uint8_t> bits(mod.log2());
  for (unsigned b = 0; b < mod.log2(); ++b) bits[b] = (index >> b) & 1u;
  return bits;
}

/// Positions where some pair of rows first differs. Equivalently the set of
/// 2-adic valuations of all pairwise differences, but computed in O(k log n):
/// bit b is a pivot iff two elements agree below b and disagree at b.
inline PivotSet pivots_of(std::span<const Index> elements, const Modulus& n) {
  if (elements.empty()) throw EmptyInputError("pivots of an empty set");
  std::vector<unsigned> pivots;
  std::unordered_map<Index, std::uint8_t> seen;
  seen.reserve(elements.size());
  for (unsigned b = 0; b < n.log2(); ++b) {
    seen.clear();
    const Index low = (Index{1} << b) - 1;
    bool pivot = false;
    for (Index e : elements) {
      auto& mask = seen[e & low];
      mask |= static_cast<std::uint8_t>(1u << ((e >> b) & 1u));
      if (mask == 3) {
        pivot = true;
        break;
      }
    }
    if (pivot) pivots.push_back(b);
  }
  return PivotSet(std::move(pivots));
}

inline PivotSet pivots_of(const IndexSet& s) {
  return pivots_of(s.elements(), s.modulus());
}

/// |s| == 2^|pivots(s)|. Singletons are conforming.
inline bool is_conforming(std::span<const Index> elements, const Modulus& n) {
  const PivotSet p = pivots_of(elements, n);
  return p.size() < 64 && elements.size() == (std::size_t{1} << p.size());
}

inline bool is_conforming(const IndexSet& s) {
  return is_conforming(s.elements(), s.modulus());
}

/// Digits of `index` at the pivot positions, smallest pivot first.
inline std::vector<std::uint8_t> pivot_tuple(Index index,
                                             const PivotSet& pivots) {
  std::vector<std::uint8_t> tuple;
  tuple.reserve(pivots.size());
  for (unsigned d : pivots.positions()) tuple.push_back((index >> d) & 1u);
  return tuple;
}

/// Pivot digits packed into an integer, bit j holding the digit at the j-th
/// smallest pivot.
inline Index pivot_code(Index index, const PivotSet& pivots) noexcept {
  Index code = 0;
  for (std::size_t j = 0; j < pivots.size(); ++j) {
    code |= ((index >> pivots[j]) & 1u) << j;
  }
  return code;
}

/// Reverse the low `bits` bits of x.
constexpr Index reverse_bits(Index x, unsigned bits) noexcept {
  Index r = 0;
  for (unsigned b = 0; b < bits; ++b) r |= ((x >> b) & 1u) << (bits - 1 - b);
  return r;
}

}  // namespace sfft

#endif  // SFFT_DIGIT_TABLE_HPP_
