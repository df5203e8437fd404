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

#ifndef SFFT_RANDOM_HPP_
#define SFFT_RANDOM_HPP_

#include <complex>
#include <cstdint>
#include <random>

namespace sfft {

/// Seeded generator shared by the support generator, tests and the CLI.
/// Draws are derived from raw mt19937_64 output so sequences are identical
/// across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound); bound > 0. Modulo bias is irrelevant here.
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  /// `count` random low bits (count <= 64).
  std::uint64_t bits(unsigned count) {
    if (count == 0) return 0;
    const std::uint64_t v = engine_();
    return count >= 64 ? v : v & ((std::uint64_t{1} << count) - 1);
  }

  /// Uniform in [0, 1).
  double unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [-1, 1).
  double symmetric() { return 2.0 * unit() - 1.0; }

  /// Real and imaginary parts uniform in [-1, 1).
  std::complex<double> complex() {
    const double re = symmetric();
    return {re, symmetric()};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sfft

#endif  // SFFT_RANDOM_HPP_
