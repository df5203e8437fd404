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

#ifndef SFFT_BUTTERFLY_HPP_
#define SFFT_BUTTERFLY_HPP_

// O(k log k) DFT of signals whose spectrum lives on a known spectral set.
//
// With rows J and columns I in canonical order, the k x k block F(J, I)
// factors as
//
//     [ 1  D ] [ M  0 ]
//     [ 1 -D ] [ 0  M ]
//
// where M = F(J_0, I_0) is the same kind of block at half the size and D is
// diagonal with entries exp(-2 pi i m 2^d0 / n), m in J_0, d0 the smallest
// sample pivot. Recursing gives a decimation-in-time network whose inputs
// are read in sample order and whose outputs come out in support order.

#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sfft/counters.hpp"
#include "sfft/error.hpp"
#include "sfft/matrix.hpp"
#include "sfft/modulus.hpp"
#include "sfft/spectral_sets.hpp"

namespace sfft {

/// Values at the canonical samples, in sample order.
using SampleVector = std::vector<Complex>;
/// Fourier coefficients on the support, in canonical support order.
using CoefficientVector = std::vector<Complex>;
using TwiddleLevels = std::vector<std::vector<Complex>>;

/// Anything indexable that yields complex sample values.
template <class S>
concept SampleSource = requires(const S& s, std::size_t i) {
  { s.size() } -> std::convertible_to<std::size_t>;
  { s[i] } -> std::convertible_to<Complex>;
};

class ButterflyPlan {
 public:
  /// Assemble a plan from precomputed parts. Only shapes are checked; use
  /// build_plan() for a plan whose twiddles are correct by construction.
  ButterflyPlan(SpectralSupport support, SamplePlan samples,
                TwiddleLevels levels)
      : support_(std::move(support)),
        samples_(std::move(samples)),
        levels_(std::move(levels)) {
    const std::size_t k = support_.size();
    if (samples_.size() != k) {
      throw InvalidParameterError("sample plan size does not match support");
    }
    if (levels_.size() != support_.log_k()) {
      throw InvalidParameterError("expected one twiddle level per pivot");
    }
    for (std::size_t l = 0; l < levels_.size(); ++l) {
      if (levels_[l].size() != (k >> (l + 1))) {
        throw InvalidParameterError("twiddle level " + std::to_string(l) +
                                    " has the wrong length");
      }
    }
  }

  const Modulus& modulus() const noexcept { return support_.modulus(); }
  const SpectralSupport& support() const noexcept { return support_; }
  const SamplePlan& samples() const noexcept { return samples_; }
  const TwiddleLevels& levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return support_.size(); }
  unsigned log_k() const noexcept { return support_.log_k(); }
  double scale() const noexcept { return samples_.scale(); }

 private:
  SpectralSupport support_;
  SamplePlan samples_;
  TwiddleLevels levels_;
};

/// Level l twiddles: exp(-2 pi i m_j 2^{d_l} / n) for the first k / 2^{l+1}
/// support elements m_j, d_l the l-th smallest sample pivot.
inline ButterflyPlan build_plan(const SpectralSupport& support) {
  SamplePlan samples = build_sample_plan(support);
  const Modulus& n = support.modulus();
  const std::size_t k = support.size();
  TwiddleLevels levels(support.log_k());
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const unsigned d = samples.pivots()[l];
    auto& level = levels[l];
    level.resize(k >> (l + 1));
    for (std::size_t j = 0; j < level.size(); ++j) {
      level[j] = forward_root(n.reduce(support[j] << d), n);
    }
  }
  return ButterflyPlan(support, std::move(samples), std::move(levels));
}

/// Butterfly network on a scratch vector already in sample order. Leaves the
/// unscaled F(J, I) x_I in `y`.
template <class Counter>
void run_butterflies(const TwiddleLevels& levels, std::span<Complex> y,
                     Counter& counter) {
  const std::size_t k = y.size();
  for (std::size_t l = levels.size(); l-- > 0;) {
    const std::size_t half = k >> (l + 1);
    const Complex* tw = levels[l].data();
    for (std::size_t s = 0; s < k; s += 2 * half) {
      Complex* lo = y.data() + s;
      Complex* hi = lo + half;
      for (std::size_t j = 0; j < half; ++j) {
        const Complex t = tw[j] * hi[j];
        counter.mul();
        const Complex a = lo[j];
        lo[j] = a + t;
        counter.add();
        hi[j] = a - t;
        counter.add();
      }
    }
  }
}

/// DFT coefficients on the support from the k samples at plan.samples().
/// Each input element is read exactly once.
template <SampleSource Source, class Counter>
CoefficientVector transform(const ButterflyPlan& plan, const Source& x,
                            Counter& counter) {
  const std::size_t k = plan.size();
  if (static_cast<std::size_t>(x.size()) != k) {
    throw InvalidParameterError("expected " + std::to_string(k) +
                                " samples, got " +
                                std::to_string(static_cast<std::size_t>(x.size())));
  }
  CoefficientVector y(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Complex v = x[i];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw InvalidInputError("sample " + std::to_string(i) +
                              " is not finite");
    }
    y[i] = v;
  }
  run_butterflies(plan.levels(), std::span<Complex>(y), counter);
  const double scale = plan.scale();
  for (auto& c : y) c *= scale;
  return y;
}

template <SampleSource Source>
CoefficientVector transform(const ButterflyPlan& plan, const Source& x) {
  NoOpCounter counter;
  return transform(plan, x, counter);
}

/// Complex adds plus multiplies performed by transform(), not counting the
/// final k scalings: each of the log2 k stages does k/2 twiddle multiplies
/// and k additions/subtractions.
inline std::uint64_t operation_count(const ButterflyPlan& plan) {
  const std::uint64_t k = plan.size();
  return plan.log_k() * (k / 2 + k);
}

inline constexpr std::size_t kDefaultSubmatrixCap = 4096;

/// F(rows, cols) with entries exp(-2 pi i r c / n), in the given orders.
inline ComplexMatrix fourier_submatrix(const Modulus& n,
                                       std::span<const Index> rows,
                                       std::span<const Index> cols,
                                       std::size_t cap = kDefaultSubmatrixCap) {
  if (rows.size() > cap || cols.size() > cap) {
    throw ResourceError("submatrix dimension exceeds cap of " +
                        std::to_string(cap));
  }
  ComplexMatrix m(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      m(r, c) = forward_root(n.mul(rows[r], cols[c]), n);
  return m;
}

/// The k x k block F(J, I) the plan factors, rows and columns canonical.
inline ComplexMatrix submatrix(const ButterflyPlan& plan,
                               std::size_t cap = kDefaultSubmatrixCap) {
  return fourier_submatrix(plan.modulus(), plan.support().elements(),
                           plan.samples().elements(), cap);
}

}  // namespace sfft

#endif  // SFFT_BUTTERFLY_HPP_
