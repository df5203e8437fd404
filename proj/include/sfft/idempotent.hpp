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

#ifndef SFFT_IDEMPOTENT_HPP_
#define SFFT_IDEMPOTENT_HPP_

// Convolution idempotents h_J = F^{-1} 1_J and the unitarity test for a pair
// of index sets built on them. The inner product of columns i1, i2 of
// F(J, I) equals n * h_J(i1 - i2), so F(J, I) is unitary up to scaling iff
// h_J vanishes on every nonzero difference of I.

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sfft/digit_table.hpp"
#include "sfft/error.hpp"
#include "sfft/modulus.hpp"

namespace sfft {

/// |h(i)| below this counts as an exact zero. True zeros are vanishing sums
/// of roots of unity and land near machine epsilon.
inline constexpr double kIdempotentZeroTolerance = 1e-9;

/// h_J(m) = (1/n) sum_{j in J} exp(2 pi i j m / n) at one point.
inline Complex idempotent_value(std::span<const Index> support, Index m,
                                const Modulus& n) {
  Complex sum{0.0, 0.0};
  for (Index j : support) sum += inverse_root(n.mul(j, m), n);
  return sum / static_cast<double>(n.value());
}

struct Idempotent {
  Modulus n;
  std::vector<Complex> values;
  /// Divisors d of n such that h vanishes exactly where gcd(i, n) = d.
  std::set<Index> zero_divisors;

  bool vanishes_at(Index i) const {
    return std::abs(values[n.reduce(i)]) < kIdempotentZeroTolerance;
  }
};

inline Idempotent idempotent_of(const IndexSet& support) {
  const Modulus& n = support.modulus();
  Idempotent h{n, std::vector<Complex>(n.value()), {}};
  for (Index m = 0; m < n.value(); ++m) {
    h.values[m] = idempotent_value(support.elements(), m, n);
    if (std::abs(h.values[m]) < kIdempotentZeroTolerance) {
      h.zero_divisors.insert(gcd_with(m, n));
    }
  }
  return h;
}

/// Whether F(support, samples) is unitary up to scaling.
inline bool check_unitary_pair(const IndexSet& support,
                               const IndexSet& samples) {
  if (support.size() != samples.size()) {
    throw InvalidParameterError(
        "support and sample sets differ in size: " +
        std::to_string(support.size()) + " vs " +
        std::to_string(samples.size()));
  }
  if (!(support.modulus() == samples.modulus())) {
    throw InvalidParameterError("support and sample sets use different n");
  }
  const Modulus& n = support.modulus();
  std::unordered_map<Index, bool> zero_at;
  const auto idx = samples.elements();
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const Index diff = n.sub(idx[a], idx[b]);
      auto [it, inserted] = zero_at.try_emplace(diff, false);
      if (inserted) {
        it->second = std::abs(idempotent_value(support.elements(), diff, n)) <
                     kIdempotentZeroTolerance;
      }
      if (!it->second) return false;
    }
  }
  return true;
}

}  // namespace sfft

#endif  // SFFT_IDEMPOTENT_HPP_
