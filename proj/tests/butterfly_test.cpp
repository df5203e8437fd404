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

#include "sfft/butterfly.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <thread>
#include <vector>

#include "sfft/oracles.hpp"
#include "sfft/random.hpp"
#include "test_oracles.hpp"

namespace sfft {
namespace {

ButterflyPlan plan_for(Index n, std::initializer_list<Index> support) {
  return build_plan(validate_support(IndexSet(Modulus(n), support)));
}

std::vector<Complex> random_coefficients(Rng& rng, std::size_t k) {
  std::vector<Complex> c(k);
  for (auto& v : c) v = rng.complex();
  return c;
}

TEST(BuildPlan, TwoPoint) {
  const auto plan = plan_for(2, {0, 1});
  ASSERT_EQ(plan.levels().size(), 1u);
  ASSERT_EQ(plan.levels()[0].size(), 1u);
  EXPECT_LT(std::abs(plan.levels()[0][0] - Complex(1.0)), 1e-15);
  const auto f = submatrix(plan);
  EXPECT_LT(std::abs(f(0, 0) - 1.0), 1e-15);
  EXPECT_LT(std::abs(f(0, 1) - 1.0), 1e-15);
  EXPECT_LT(std::abs(f(1, 0) - 1.0), 1e-15);
  EXPECT_LT(std::abs(f(1, 1) + 1.0), 1e-15);
}

TEST(BuildPlan, FullGroupTopLevelIsClassicalTwiddleTable) {
  const Index n = 64;
  const auto plan = build_plan(validate_support(IndexSet::full(Modulus(n))));
  ASSERT_EQ(plan.levels().size(), 6u);
  const auto& top = plan.levels()[0];
  ASSERT_EQ(top.size(), n / 2);
  for (Index m = 0; m < n / 2; ++m) {
    const Complex expected = std::polar(1.0, -2.0 * std::numbers::pi * m / n);
    EXPECT_LT(std::abs(top[m] - expected), 1e-14);
  }
}

TEST(BuildPlan, FigureOneTwiddles) {
  const auto plan = plan_for(1024, {161, 545, 636, 1020});
  ASSERT_EQ(plan.levels().size(), 2u);
  ASSERT_EQ(plan.levels()[0].size(), 2u);
  const Index j0[] = {636, 545};
  for (int j = 0; j < 2; ++j) {
    const Complex expected =
        std::polar(1.0, -2.0 * std::numbers::pi * (j0[j] * 4 % 1024) / 1024.0);
    EXPECT_LT(std::abs(plan.levels()[0][j] - expected), 1e-14);
  }
  // Level 1 uses pivot 9 and the single element 636.
  const Complex expected =
      std::polar(1.0, -2.0 * std::numbers::pi * (636 * 512 % 1024) / 1024.0);
  EXPECT_LT(std::abs(plan.levels()[1][0] - expected), 1e-14);
}

TEST(BuildPlan, TwiddleShapeInvariants) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const unsigned log_n = 1 + seed % 10;
    const auto plan = build_plan(
        random_spectral_support(Index{1} << log_n, seed % (log_n + 1), seed));
    ASSERT_EQ(plan.levels().size(), plan.log_k());
    for (std::size_t l = 0; l < plan.levels().size(); ++l) {
      ASSERT_EQ(plan.levels()[l].size(), plan.size() >> (l + 1));
      for (const auto& t : plan.levels()[l]) ASSERT_NEAR(std::abs(t), 1.0, 1e-12);
    }
  }
}

TEST(Transform, DcOnly) {
  for (Index n : {1u, 16u, 1024u}) {
    const auto plan = build_plan(validate_support(IndexSet(Modulus(n), {0})));
    const std::vector<Complex> x{{0.25, -1.5}};
    const auto c = transform(plan, x);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_LT(std::abs(c[0] - Complex(0.25, -1.5) * double(n)), 1e-12);
  }
}

TEST(Transform, AllOnesOnFourPoints) {
  const auto plan = plan_for(4, {0, 1, 2, 3});
  EXPECT_EQ(plan.samples().vector(), (std::vector<Index>{0, 2, 1, 3}));
  const auto c = transform(plan, std::vector<Complex>(4, 1.0));
  EXPECT_LT(std::abs(c[0] - 4.0), 1e-15);
  for (int j = 1; j < 4; ++j) EXPECT_LT(std::abs(c[j]), 1e-15);
}

TEST(Transform, RecoversSynthesizedCoefficients) {
  Rng rng(77);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const unsigned log_n = 1 + seed % 10;
    const auto support =
        random_spectral_support(Index{1} << log_n, seed % (log_n + 1), seed);
    const auto plan = build_plan(support);
    const auto c = random_coefficients(rng, support.size());
    const auto x = synthesize(support.elements(), c, plan.samples().elements(),
                              support.modulus());
    ASSERT_LE(max_relative_error(transform(plan, x), c), 1e-10);
  }
}

TEST(Transform, FigureOneRoundTrip) {
  Rng rng(1);
  const auto plan = plan_for(1024, {161, 545, 636, 1020});
  const auto c = random_coefficients(rng, 4);
  const auto x = synthesize(plan.support().elements(), c,
                            plan.samples().elements(), plan.modulus());
  const auto full = synthesize_full(plan.support().elements(), c, plan.modulus());
  const auto naive = naive_sparse_dft(full, plan.support().elements());
  const auto fast = transform(plan, x);
  EXPECT_LE(max_relative_error(fast, c), 1e-10);
  EXPECT_LE(max_relative_error(fast, naive), 1e-10);
}

TEST(Transform, FullGroupMatchesQuadraticDft) {
  Rng rng(3);
  for (unsigned log_n = 0; log_n <= 9; ++log_n) {
    const Modulus n = Modulus::from_log2(log_n);
    std::vector<Complex> signal(n.value());
    for (auto& v : signal) v = rng.complex();
    const auto plan = build_plan(validate_support(IndexSet::full(n)));
    std::vector<Complex> x;
    for (Index i : plan.samples().elements()) x.push_back(signal[i]);
    EXPECT_LE(max_abs_error(transform(plan, x), testing::quadratic_dft(signal)),
              1e-10);
  }
}

TEST(Transform, Linear) {
  Rng rng(4);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto plan = build_plan(random_spectral_support(512, seed % 8, seed));
    const std::size_t k = plan.size();
    const auto x = random_coefficients(rng, k);
    const auto y = random_coefficients(rng, k);
    const Complex alpha = rng.complex(), beta = rng.complex();
    std::vector<Complex> mix(k);
    for (std::size_t i = 0; i < k; ++i) mix[i] = alpha * x[i] + beta * y[i];
    const auto tx = transform(plan, x), ty = transform(plan, y);
    std::vector<Complex> expected(k);
    for (std::size_t i = 0; i < k; ++i) expected[i] = alpha * tx[i] + beta * ty[i];
    EXPECT_LE(max_relative_error(transform(plan, mix), expected), 1e-10);
  }
}

TEST(Transform, Errors) {
  const auto plan = plan_for(16, {0, 8});
  EXPECT_THROW(transform(plan, std::vector<Complex>(3)), InvalidParameterError);
  EXPECT_THROW(transform(plan, std::vector<Complex>{
                                   {1.0, 0.0},
                                   {std::numeric_limits<double>::quiet_NaN(), 0.0}}),
               InvalidInputError);
  EXPECT_THROW(transform(plan, std::vector<Complex>{
                                   {std::numeric_limits<double>::infinity(), 0.0},
                                   {0.0, 0.0}}),
               InvalidInputError);
}

struct CountingSource {
  const std::vector<Complex>* values;
  mutable std::size_t reads = 0;
  std::size_t size() const { return values->size(); }
  Complex operator[](std::size_t i) const {
    ++reads;
    return (*values)[i];
  }
};

TEST(Transform, ReadsEachSampleOnce) {
  Rng rng(6);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto plan = build_plan(random_spectral_support(1024, seed % 9, seed));
    const auto x = random_coefficients(rng, plan.size());
    CountingSource source{&x};
    const auto c = transform(plan, source);
    EXPECT_EQ(source.reads, plan.size());
    EXPECT_LE(max_relative_error(c, transform(plan, x)), 0.0);
  }
}

TEST(OperationCount, SmallCases) {
  EXPECT_EQ(operation_count(plan_for(16, {3})), 0u);
  EXPECT_LE(operation_count(plan_for(2, {0, 1})), 4u);
  const auto eight = build_plan(random_spectral_support(1024, 3, 1));
  EXPECT_LE(operation_count(eight), 48u);
}

TEST(OperationCount, EqualsCountedExecution) {
  Rng rng(10);
  for (unsigned r = 0; r <= 12; ++r) {
    const auto plan = build_plan(random_spectral_support(1u << 13, r, r));
    OpCounter counter;
    transform(plan, random_coefficients(rng, plan.size()), counter);
    EXPECT_EQ(counter.total(), operation_count(plan));
    EXPECT_EQ(counter.muls, r * plan.size() / 2);
    const std::uint64_t k = plan.size();
    EXPECT_LE(operation_count(plan), 2 * k * r);
  }
}

TEST(Submatrix, PrintedExample) {
  const Modulus n(1024);
  const std::vector<Index> rows{1, 292, 641, 932}, cols{316, 384, 828, 896};
  const auto f = fourier_submatrix(n, rows, cols);
  // Printed to two decimals: compare real and imaginary parts separately.
  auto near = [](Complex a, Complex b) {
    return std::abs(a.real() - b.real()) <= 0.005 &&
           std::abs(a.imag() - b.imag()) <= 0.005;
  };
  EXPECT_TRUE(near(f(0, 0), {-0.36, -0.93}));
  EXPECT_TRUE(near(f(1, 0), {0.77, -0.63}));
  const auto gram = f.adjoint() * f;
  EXPECT_LT(max_abs_diff(gram, ComplexMatrix::identity(4, 4.0)), 1e-9);
}

TEST(Submatrix, TrivialAndCap) {
  const auto one = submatrix(plan_for(8, {0}));
  EXPECT_LT(std::abs(one(0, 0) - 1.0), 1e-15);
  const auto plan = build_plan(random_spectral_support(64, 4, 2));
  EXPECT_THROW(submatrix(plan, 8), ResourceError);
}

// Quadrant identities of the factorisation, at every recursion depth.
TEST(Submatrix, BlockIdentitiesAtEveryLevel) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const unsigned log_n = 1 + seed % 10;
    const auto plan = build_plan(
        random_spectral_support(Index{1} << log_n, seed % std::min(log_n + 1, 8u), seed));
    const auto full = submatrix(plan);
    for (std::size_t l = 0; l < plan.log_k(); ++l) {
      const std::size_t m = plan.size() >> l, h = m / 2;
      const auto e = full.block(0, 0, m, m);
      const auto ul = e.block(0, 0, h, h), ur = e.block(0, h, h, h);
      const auto ll = e.block(h, 0, h, h), lr = e.block(h, h, h, h);
      ComplexMatrix d_ul(h, h), neg_ur(h, h);
      for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < h; ++c) {
          d_ul(r, c) = plan.levels()[l][r] * ul(r, c);
          neg_ur(r, c) = -ur(r, c);
        }
      ASSERT_LE(max_abs_diff(ll, ul), 1e-12);
      ASSERT_LE(max_abs_diff(ur, d_ul), 1e-12);
      ASSERT_LE(max_abs_diff(lr, neg_ur), 1e-12);
      ASSERT_LE(max_abs_diff(e.adjoint() * e,
                             ComplexMatrix::identity(m, static_cast<double>(m))),
                1e-9);
    }
  }
}

TEST(Transform, ConcurrentCallsShareOnePlan) {
  const auto plan = build_plan(random_spectral_support(1 << 12, 8, 99));
  Rng rng(12);
  std::vector<std::vector<Complex>> inputs(8), expected(8), got(8);
  for (std::size_t t = 0; t < inputs.size(); ++t) {
    inputs[t] = random_coefficients(rng, plan.size());
    expected[t] = transform(plan, inputs[t]);
  }
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < inputs.size(); ++t)
    threads.emplace_back([&, t] {
      for (int rep = 0; rep < 20; ++rep) got[t] = transform(plan, inputs[t]);
    });
  for (auto& th : threads) th.join();
  for (std::size_t t = 0; t < inputs.size(); ++t) EXPECT_EQ(got[t], expected[t]);
}

TEST(ButterflyPlanTest, RejectsMisshapenLevels) {
  const auto support = random_spectral_support(64, 2, 0);
  EXPECT_THROW(ButterflyPlan(support, build_sample_plan(support), TwiddleLevels(1)),
               InvalidParameterError);
  EXPECT_THROW(ButterflyPlan(support, build_sample_plan(support),
                             TwiddleLevels{std::vector<Complex>(2), std::vector<Complex>(2)}),
               InvalidParameterError);
}

}  // namespace
}  // namespace sfft
