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

#ifndef SFFT_MODULUS_HPP_
#define SFFT_MODULUS_HPP_

#include <bit>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>

#include "sfft/error.hpp"

namespace sfft {

using Index = std::uint64_t;
using Complex = std::complex<double>;

/// Length of the ambient cyclic group Z_n. Always a power of two.
class Modulus {
 public:
  static constexpr unsigned kMaxLog2 = 63;

  explicit Modulus(Index n) : n_(n) {
    if (n == 0 || !std::has_single_bit(n)) {
      throw UnsupportedModulusError("modulus must be a power of two, got " +
                                    std::to_string(n));
    }
    log2_ = static_cast<unsigned>(std::countr_zero(n));
  }

  static Modulus from_log2(unsigned log2n) {
    if (log2n > kMaxLog2) {
      throw UnsupportedModulusError("log2(n) = " + std::to_string(log2n) +
                                    " exceeds " + std::to_string(kMaxLog2));
    }
    return Modulus(Index{1} << log2n);
  }

  Index value() const noexcept { return n_; }
  unsigned log2() const noexcept { return log2_; }
  Index mask() const noexcept { return n_ - 1; }

  /// Residue mod n. Unsigned wraparound is harmless because n divides 2^64.
  Index reduce(Index a) const noexcept { return a & mask(); }
  Index mul(Index a, Index b) const noexcept { return reduce(a * b); }
  Index sub(Index a, Index b) const noexcept { return reduce(a - b); }

  bool contains(Index a) const noexcept { return a < n_; }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  Index n_;
  unsigned log2_ = 0;
};

/// exp(-2 pi i e / n), the forward DFT kernel. `e` is reduced first so the
/// phase never loses precision to large products.
inline Complex forward_root(Index e, const Modulus& n) {
  const double angle = -2.0 * std::numbers::pi *
                       static_cast<double>(n.reduce(e)) /
                       static_cast<double>(n.value());
  return {std::cos(angle), std::sin(angle)};
}

/// exp(+2 pi i e / n), the inverse DFT kernel (without the 1/n).
inline Complex inverse_root(Index e, const Modulus& n) {
  return std::conj(forward_root(e, n));
}

/// gcd(i, n) for n a power of two; gcd(0, n) = n.
inline Index gcd_with(Index i, const Modulus& n) noexcept {
  i = n.reduce(i);
  if (i == 0) return n.value();
  return Index{1} << std::countr_zero(i);
}

}  // namespace sfft

#endif  // SFFT_MODULUS_HPP_
