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

#ifndef SFFT_SPECTRAL_SETS_HPP_
#define SFFT_SPECTRAL_SETS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sfft/digit_table.hpp"
#include "sfft/error.hpp"
#include "sfft/modulus.hpp"
#include "sfft/random.hpp"

namespace sfft {

/// Which pivot digit acts as the most significant sort key.
///
/// Frequency rows are ordered with the largest pivot as the primary key
/// (pivot digits 00, 10, 01, 11 read smallest pivot first); time-domain
/// columns use the smallest pivot as the primary key (00, 01, 10, 11). The
/// two orders are bit reversals of each other. Non-pivot digits never take
/// part in the comparison.
enum class PivotOrder {
  kLargestPivotFirst,   // row order of the support J
  kSmallestPivotFirst,  // column order of the samples I
};

/// Rank of `index` under `order`; a bijection onto [0, 2^|pivots|) for
/// conforming sets.
inline Index pivot_rank(Index index, const PivotSet& pivots, PivotOrder order) {
  const Index code = pivot_code(index, pivots);
  return order == PivotOrder::kLargestPivotFirst
             ? code
             : reverse_bits(code, static_cast<unsigned>(pivots.size()));
}

inline void sort_by_pivots(std::vector<Index>& elements, const PivotSet& pivots,
                           PivotOrder order) {
  std::stable_sort(elements.begin(), elements.end(), [&](Index a, Index b) {
    return pivot_rank(a, pivots, order) < pivot_rank(b, pivots, order);
  });
}

/// A validated spectral frequency support J, stored in canonical row order.
/// The first half of the elements is J_0 (largest pivot digit zero), the
/// second half J_1.
class SpectralSupport {
 public:
  const Modulus& modulus() const noexcept { return n_; }
  std::span<const Index> elements() const noexcept { return elements_; }
  const std::vector<Index>& vector() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  Index operator[](std::size_t i) const { return elements_[i]; }
  const PivotSet& pivots() const noexcept { return pivots_; }
  /// r with k = 2^r.
  unsigned log_k() const noexcept {
    return static_cast<unsigned>(pivots_.size());
  }
  IndexSet as_index_set() const { return IndexSet(n_, elements_); }

 private:
  SpectralSupport(Modulus n, std::vector<Index> elements, PivotSet pivots)
      : n_(n), elements_(std::move(elements)), pivots_(std::move(pivots)) {}

  friend SpectralSupport validate_support(const IndexSet& raw);

  Modulus n_;
  std::vector<Index> elements_;
  PivotSet pivots_;
};

/// Canonicalise a support set, throwing NotSpectralError unless its digit
/// table is conforming. Input order is irrelevant.
inline SpectralSupport validate_support(const IndexSet& raw) {
  if (raw.empty()) throw EmptyInputError("empty support set");
  PivotSet pivots = pivots_of(raw);
  if (!is_conforming(raw)) {
    throw NotSpectralError(pivots.vector(), raw.size());
  }
  std::vector<Index> sorted(raw.elements().begin(), raw.elements().end());
  sort_by_pivots(sorted, pivots, PivotOrder::kLargestPivotFirst);
  return SpectralSupport(raw.modulus(), std::move(sorted), std::move(pivots));
}

/// d -> log2(n) - 1 - d, i.e. the divisor 2^d maps to n / (2 * 2^d).
inline PivotSet dual_pivots(const PivotSet& pivots, const Modulus& n) {
  std::vector<unsigned> out;
  out.reserve(pivots.size());
  for (unsigned d : pivots.positions()) {
    if (d >= n.log2()) {
      throw InvalidParameterError("pivot position " + std::to_string(d) +
                                  " not below log2(n) = " +
                                  std::to_string(n.log2()));
    }
    out.push_back(n.log2() - 1 - d);
  }
  return PivotSet(std::move(out));
}

/// Canonical time-sample set I for a support: pivot digits at the dual
/// positions range over every tuple, all other digits are zero. Samples are
/// kept in column order, so samples[0] == 0 and the first half is I_0.
class SamplePlan {
 public:
  SamplePlan(Modulus n, std::vector<Index> samples, PivotSet pivots)
      : n_(n), samples_(std::move(samples)), pivots_(std::move(pivots)) {}

  const Modulus& modulus() const noexcept { return n_; }
  std::span<const Index> elements() const noexcept { return samples_; }
  const std::vector<Index>& vector() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  Index operator[](std::size_t i) const { return samples_[i]; }
  const PivotSet& pivots() const noexcept { return pivots_; }
  /// k' = n / k, the factor relating k' F(J, I) x_I to the DFT on J.
  double scale() const noexcept {
    return static_cast<double>(n_.value()) /
           static_cast<double>(samples_.size());
  }
  IndexSet as_index_set() const { return IndexSet(n_, samples_); }

 private:
  Modulus n_;
  std::vector<Index> samples_;
  PivotSet pivots_;
};

inline SamplePlan build_sample_plan(const SpectralSupport& support) {
  PivotSet dual = dual_pivots(support.pivots(), support.modulus());
  const unsigned r = static_cast<unsigned>(dual.size());
  const std::size_t k = std::size_t{1} << r;
  std::vector<Index> samples(k);
  for (Index code = 0; code < k; ++code) {
    Index value = 0;
    for (unsigned j = 0; j < r; ++j) value |= ((code >> j) & 1u) << dual[j];
    // Column position: smallest pivot digit is the most significant key.
    samples[reverse_bits(code, r)] = value;
  }
  return SamplePlan(support.modulus(), std::move(samples), std::move(dual));
}

/// Deterministic random spectral set of size 2^r with exactly r pivots.
///
/// Rows are the leaves of a binary tree: digits below the smallest pivot are
/// shared by all rows, digits strictly between pivots j and j+1 depend only on
/// the first j+1 pivot digits, digits above the largest pivot are free per
/// row. Any two rows therefore first differ at a pivot.
inline SpectralSupport random_spectral_support(Index n, unsigned r,
                                               std::uint64_t seed) {
  const Modulus mod(n);
  const unsigned log_n = mod.log2();
  if (r > log_n) {
    throw InvalidParameterError("pivot count " + std::to_string(r) +
                                " exceeds log2(n) = " + std::to_string(log_n));
  }
  Rng rng(seed);

  // Partial Fisher-Yates over bit positions.
  std::vector<unsigned> positions(log_n);
  for (unsigned b = 0; b < log_n; ++b) positions[b] = b;
  for (unsigned i = 0; i < r; ++i) {
    const unsigned j = i + static_cast<unsigned>(rng.below(log_n - i));
    std::swap(positions[i], positions[j]);
  }
  std::vector<unsigned> pivots(positions.begin(), positions.begin() + r);
  std::sort(pivots.begin(), pivots.end());

  auto field = [](unsigned lo, unsigned hi) -> Index {  // bits [lo, hi)
    if (hi <= lo) return 0;
    const unsigned width = hi - lo;
    return (width >= 64 ? ~Index{0} : ((Index{1} << width) - 1)) << lo;
  };

  const Index shared = rng.next() & field(0, r ? pivots[0] : log_n);
  if (r == 0) return validate_support(IndexSet(mod, {shared}));

  const std::size_t k = std::size_t{1} << r;
  // gap[j][prefix]: digits strictly between pivot j and pivot j+1, keyed by
  // the first j+1 pivot digits.
  std::vector<std::vector<Index>> gap(r - 1);
  for (unsigned j = 0; j + 1 < r; ++j) {
    const Index mask = field(pivots[j] + 1, pivots[j + 1]);
    gap[j].resize(std::size_t{1} << (j + 1));
    for (auto& g : gap[j]) g = rng.next() & mask;
  }
  const Index top_mask = field(pivots[r - 1] + 1, log_n);

  std::vector<Index> rows(k);
  for (Index code = 0; code < k; ++code) {
    Index value = shared;
    for (unsigned j = 0; j < r; ++j) {
      value |= ((code >> j) & 1u) << pivots[j];
      if (j + 1 < r) value |= gap[j][code & ((Index{1} << (j + 1)) - 1)];
    }
    value |= rng.next() & top_mask;
    rows[code] = value;
  }
  return validate_support(IndexSet(mod, std::move(rows)));
}

}  // namespace sfft

#endif  // SFFT_SPECTRAL_SETS_HPP_
