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

#include "sfft/oracles.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "sfft/butterfly.hpp"
#include "sfft/random.hpp"
#include "test_oracles.hpp"

namespace sfft {
namespace {

std::vector<Complex> random_vector(Rng& rng, std::size_t size) {
  std::vector<Complex> v(size);
  for (auto& x : v) x = rng.complex();
  return v;
}

TEST(FullSignalTest, LengthMustMatch) {
  EXPECT_THROW(FullSignal(Modulus(8), std::vector<Complex>(4)), InvalidParameterError);
}

TEST(NaiveSparseDft, Delta) {
  const FullSignal x(Modulus(4), {1.0, 0.0, 0.0, 0.0});
  const std::vector<Index> all{0, 1, 2, 3};
  for (const auto& c : naive_sparse_dft(x, all)) EXPECT_LT(std::abs(c - 1.0), 1e-15);
}

TEST(NaiveSparseDft, Constant) {
  const FullSignal x(Modulus(4), std::vector<Complex>(4, 1.0));
  const std::vector<Index> dc{0};
  EXPECT_LT(std::abs(naive_sparse_dft(x, dc)[0] - 4.0), 1e-15);
}

TEST(NaiveSparseDft, MatchesFullFftOnSupport) {
  Rng rng(1);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto support = random_spectral_support(256, seed % 6, seed);
    const auto c = random_vector(rng, support.size());
    const auto x = synthesize_full(support.elements(), c, support.modulus());
    const auto spectrum = full_fft(x);
    const auto naive = naive_sparse_dft(x, support.elements());
    for (std::size_t j = 0; j < support.size(); ++j)
      EXPECT_LT(std::abs(naive[j] - spectrum[support[j]]), 1e-10);
  }
}

TEST(Synthesize, Examples) {
  const Modulus n(16);
  std::vector<Index> all(16);
  for (Index i = 0; i < 16; ++i) all[i] = i;
  const std::vector<Index> dc{0};
  for (const auto& v : synthesize(dc, std::vector<Complex>{16.0}, all, n))
    EXPECT_LT(std::abs(v - 1.0), 1e-15);
  const std::vector<Index> two{0, 8};
  const auto x = synthesize(two, std::vector<Complex>{16.0, 16.0}, all, n);
  for (Index i = 0; i < 16; ++i)
    EXPECT_LT(std::abs(x[i] - (1.0 + (i % 2 ? -1.0 : 1.0))), 1e-14);
  EXPECT_THROW(synthesize(two, std::vector<Complex>{1.0}, all, n),
               InvalidParameterError);
}

TEST(Synthesize, RoundTripsThroughNaiveDft) {
  Rng rng(2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto support = random_spectral_support(128, seed % 5, seed);
    const auto c = random_vector(rng, support.size());
    const auto x = synthesize_full(support.elements(), c, support.modulus());
    EXPECT_LE(max_relative_error(naive_sparse_dft(x, support.elements()), c), 1e-12);
  }
}

TEST(FullFft, DeltaAndOnes) {
  for (Index n : {1u, 2u, 8u, 256u}) {
    std::vector<Complex> delta(n), ones(n, 1.0);
    delta[0] = 1.0;
    for (const auto& v : full_fft(delta)) EXPECT_LT(std::abs(v - 1.0), 1e-12);
    const auto f = full_fft(ones);
    EXPECT_LT(std::abs(f[0] - double(n)), 1e-9);
    for (Index m = 1; m < n; ++m) EXPECT_LT(std::abs(f[m]), 1e-9);
  }
}

TEST(FullFft, MatchesQuadraticDftAndParseval) {
  Rng rng(3);
  for (Index n : {2u, 16u, 128u, 512u}) {
    const auto x = random_vector(rng, n);
    const auto fast = full_fft(x);
    EXPECT_LE(max_abs_error(fast, testing::quadratic_dft(x)), 1e-9 * double(n));
    double ex = 0, ef = 0;
    for (const auto& v : x) ex += std::norm(v);
    for (const auto& v : fast) ef += std::norm(v);
    EXPECT_NEAR(ef / (double(n) * ex), 1.0, 1e-8);
    EXPECT_LE(max_abs_error(inverse_full_fft(fast), x), 1e-12);
  }
  EXPECT_THROW(full_fft(std::vector<Complex>(6)), UnsupportedModulusError);
}

TEST(VandermondeRecover, DcOnly) {
  const std::vector<Index> dc{0};
  const auto c = vandermonde_recover(std::vector<Complex>{{0.5, 0.25}}, 0, dc,
                                     Modulus(32));
  EXPECT_LT(std::abs(c[0] - Complex(16.0, 8.0)), 1e-12);
}

TEST(VandermondeRecover, MatchesButterflyOnSmallSpectralSets) {
  Rng rng(4);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto support = random_spectral_support(16, 2, seed);
    const auto c = random_vector(rng, 4);
    const std::vector<Index> consecutive{0, 1, 2, 3};
    const auto x = synthesize(support.elements(), c, consecutive, support.modulus());
    const auto dense = vandermonde_recover(x, 0, support.elements(), support.modulus());
    const auto plan = build_plan(support);
    const auto fast = transform(plan, synthesize(support.elements(), c,
                                                 plan.samples().elements(),
                                                 support.modulus()));
    EXPECT_LE(max_relative_error(dense, fast), 1e-6);
  }
}

TEST(VandermondeRecover, ArbitraryOffset) {
  Rng rng(5);
  const Modulus n(64);
  const std::vector<Index> support{3, 10, 40, 63};
  const auto c = random_vector(rng, 4);
  const std::vector<Index> at{61, 62, 63, 0};  // wraps around
  const auto x = synthesize(support, c, at, n);
  EXPECT_LE(max_relative_error(vandermonde_recover(x, 61, support, n), c), 1e-9);
}

TEST(VandermondeRecover, TripleCrossCheck) {
  Rng rng(6);
  const Modulus n(8);
  const std::vector<Index> support{0, 1, 2, 3}, at{0, 1, 2, 3};
  const auto c = random_vector(rng, 4);
  const auto full = synthesize_full(support, c, n);
  const auto dense = vandermonde_recover(synthesize(support, c, at, n), 0, support, n);
  EXPECT_LE(max_relative_error(dense, aliasing_recover(full, support)), 1e-9);
  EXPECT_LE(max_relative_error(dense, c), 1e-9);
}

TEST(SolveDense, SingularSystem) {
  ComplexMatrix a(2, 2);
  a(0, 0) = 1.0;
  a(0, 1) = 2.0;
  a(1, 0) = 2.0;
  a(1, 1) = 4.0;
  EXPECT_THROW(solve_dense(a, std::vector<Complex>{1.0, 1.0}), ConditioningError);
}

TEST(SolveDense, IllConditionedVandermondeIsReported) {
  // 32 nodes packed on an arc of 2 pi * 32 / 2^18: hopeless in double.
  const Modulus n(1u << 18);
  std::vector<Index> support(32);
  for (Index j = 0; j < 32; ++j) support[j] = j;
  std::vector<Complex> x(32, 1.0);
  EXPECT_THROW(vandermonde_recover(x, 0, support, n), ConditioningError);
}

TEST(AliasingRecover, FoldedTwoPoint) {
  // n = 4, spectrum [a, b, 0, 0].
  const Complex a{1.5, -0.5}, b{-2.0, 0.25};
  const std::vector<Index> support{0, 1};
  const auto x = synthesize_full(support, std::vector<Complex>{a, b}, Modulus(4));
  const auto c = aliasing_recover(x, support);
  EXPECT_LT(std::abs(c[0] - a), 1e-14);
  EXPECT_LT(std::abs(c[1] - b), 1e-14);
}

TEST(AliasingRecover, SingleFrequency) {
  const FullSignal x(Modulus(8), std::vector<Complex>(8, Complex(0.5, 1.0)));
  const std::vector<Index> dc{0};
  EXPECT_LT(std::abs(aliasing_recover(x, dc)[0] - Complex(4.0, 8.0)), 1e-14);
}

TEST(AliasingRecover, ConsecutiveAndPeriodicMatchButterfly) {
  Rng rng(7);
  const Modulus n(1024);
  for (Index k : {1u, 2u, 8u, 64u}) {
    std::vector<Index> consecutive(k), periodic(k);
    for (Index j = 0; j < k; ++j) {
      consecutive[j] = j;
      periodic[j] = j * (1024 / k);
    }
    for (const auto& support : {consecutive, periodic}) {
      const auto c = random_vector(rng, k);
      const auto x = synthesize_full(support, c, n);
      const auto alias = aliasing_recover(x, support);
      EXPECT_LE(max_relative_error(alias, c), 1e-10);
      const auto plan = build_plan(validate_support(IndexSet(n, support)));
      std::vector<Complex> at_samples;
      for (Index i : plan.samples().elements()) at_samples.push_back(x[i]);
      EXPECT_LE(max_relative_error(transform(plan, at_samples), alias), 1e-10);
    }
  }
}

TEST(AliasingRecover, RejectsOtherShapes) {
  const FullSignal x(Modulus(8), std::vector<Complex>(8));
  const std::vector<Index> odd{0, 2, 5}, scattered{1, 5};
  EXPECT_THROW(aliasing_recover(x, odd), InvalidParameterError);
  EXPECT_THROW(aliasing_recover(x, scattered), InvalidParameterError);
}

}  // namespace
}  // namespace sfft
