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

#ifndef SFFT_ORACLES_HPP_
#define SFFT_ORACLES_HPP_

// Reference computations used to cross-check the butterfly path: naive
// evaluation of the DFT on a support, naive synthesis, a dense solve of the
// sampling equations, the aliasing shortcut for consecutive and periodic
// supports, and a textbook radix-2 FFT. None of them touches ButterflyPlan.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sfft/counters.hpp"
#include "sfft/digit_table.hpp"
#include "sfft/error.hpp"
#include "sfft/matrix.hpp"
#include "sfft/modulus.hpp"

namespace sfft {

/// A length-n signal on Z_n.
struct FullSignal {
  FullSignal(Modulus modulus, std::vector<Complex> v)
      : n(modulus), values(std::move(v)) {
    if (values.size() != n.value()) {
      throw InvalidParameterError("signal length " +
                                  std::to_string(values.size()) +
                                  " differs from n = " +
                                  std::to_string(n.value()));
    }
  }

  std::size_t size() const noexcept { return values.size(); }
  const Complex& operator[](std::size_t i) const { return values[i]; }

  Modulus n;
  std::vector<Complex> values;
};

/// sum_{i in at} x(i) exp(-2 pi i j i / n) for every j in `support`. This is
/// the DFT on the support whenever `at` covers all nonzero samples of x.
inline std::vector<Complex> naive_sparse_dft(std::span<const Complex> x,
                                             std::span<const Index> at,
                                             std::span<const Index> support,
                                             const Modulus& n) {
  if (x.size() != at.size()) {
    throw InvalidParameterError("sample values and indices differ in length");
  }
  if (at.size() < support.size()) {
    throw InvalidParameterError("fewer samples than support elements");
  }
  std::vector<Complex> out(support.size());
  for (std::size_t j = 0; j < support.size(); ++j) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < at.size(); ++i) {
      acc += x[i] * forward_root(n.mul(support[j], at[i]), n);
    }
    out[j] = acc;
  }
  return out;
}

/// O(nk) evaluation over a whole signal.
inline std::vector<Complex> naive_sparse_dft(const FullSignal& x,
                                             std::span<const Index> support) {
  std::vector<Index> all(x.n.value());
  for (Index i = 0; i < all.size(); ++i) all[i] = i;
  return naive_sparse_dft(x.values, all, support, x.n);
}

/// x(i) = (1/n) sum_j c_j exp(2 pi i i j / n) at each requested i.
inline std::vector<Complex> synthesize(std::span<const Index> support,
                                       std::span<const Complex> coefficients,
                                       std::span<const Index> at,
                                       const Modulus& n) {
  if (coefficients.size() != support.size()) {
    throw InvalidParameterError("coefficient count differs from support size");
  }
  const double inv_n = 1.0 / static_cast<double>(n.value());
  std::vector<Complex> x(at.size());
  for (std::size_t i = 0; i < at.size(); ++i) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < support.size(); ++j) {
      acc += coefficients[j] * inverse_root(n.mul(at[i], support[j]), n);
    }
    x[i] = acc * inv_n;
  }
  return x;
}

inline FullSignal synthesize_full(std::span<const Index> support,
                                  std::span<const Complex> coefficients,
                                  const Modulus& n) {
  std::vector<Index> all(n.value());
  for (Index i = 0; i < all.size(); ++i) all[i] = i;
  return FullSignal(n, synthesize(support, coefficients, all, n));
}

/// Iterative radix-2 decimation-in-time FFT with an explicit bit-reversal
/// pass. Forward kernel exp(-2 pi i m t / n), no normalisation.
inline std::vector<Complex> full_fft(std::span<const Complex> x) {
  const Modulus n(x.size());
  const unsigned bits = n.log2();
  std::vector<Complex> a(x.size());
  for (Index i = 0; i < x.size(); ++i) a[reverse_bits(i, bits)] = x[i];
  for (Index len = 2; len <= n.value(); len <<= 1) {
    const Index stride = n.value() / len;
    for (Index s = 0; s < n.value(); s += len) {
      for (Index j = 0; j < len / 2; ++j) {
        const Complex t = forward_root(j * stride, n) * a[s + j + len / 2];
        const Complex u = a[s + j];
        a[s + j] = u + t;
        a[s + j + len / 2] = u - t;
      }
    }
  }
  return a;
}

inline std::vector<Complex> full_fft(const FullSignal& x) {
  return full_fft(x.values);
}

/// Inverse of full_fft, including the 1/n.
inline std::vector<Complex> inverse_full_fft(std::span<const Complex> spectrum) {
  std::vector<Complex> conj(spectrum.begin(), spectrum.end());
  for (auto& v : conj) v = std::conj(v);
  auto x = full_fft(conj);
  const double inv_n = 1.0 / static_cast<double>(spectrum.size());
  for (auto& v : x) v = std::conj(v) * inv_n;
  return x;
}

/// Relative residual above which a dense solve is reported as ill-conditioned.
inline constexpr double kDenseSolveResidualTolerance = 1e-8;

/// Solve a x = b by Gaussian elimination with partial pivoting.
template <class Counter = NoOpCounter>
std::vector<Complex> solve_dense(const ComplexMatrix& a,
                                 std::span<const Complex> b,
                                 Counter&& counter = {}) {
  const std::size_t k = a.rows();
  if (a.cols() != k || b.size() != k) {
    throw InvalidParameterError("dense solve needs a square system");
  }
  ComplexMatrix lu = a;
  std::vector<Complex> x(b.begin(), b.end());
  double scale = 0.0;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) scale = std::max(scale, std::abs(a(r, c)));

  for (std::size_t p = 0; p < k; ++p) {
    std::size_t best = p;
    for (std::size_t r = p + 1; r < k; ++r)
      if (std::abs(lu(r, p)) > std::abs(lu(best, p))) best = r;
    // A pivot at rounding level means the matrix is numerically singular.
    if (std::abs(lu(best, p)) <= scale * static_cast<double>(k) * 0x1.0p-52) {
      throw ConditioningError("singular system at column " + std::to_string(p));
    }
    if (best != p) {
      for (std::size_t c = 0; c < k; ++c) std::swap(lu(p, c), lu(best, c));
      std::swap(x[p], x[best]);
    }
    for (std::size_t r = p + 1; r < k; ++r) {
      const Complex f = lu(r, p) / lu(p, p);
      counter.mul();
      for (std::size_t c = p + 1; c < k; ++c) {
        lu(r, c) -= f * lu(p, c);
        counter.mul();
        counter.add();
      }
      x[r] -= f * x[p];
      counter.mul();
      counter.add();
    }
  }
  for (std::size_t p = k; p-- > 0;) {
    Complex acc = x[p];
    for (std::size_t c = p + 1; c < k; ++c) {
      acc -= lu(p, c) * x[c];
      counter.mul();
      counter.add();
    }
    x[p] = acc / lu(p, p);
    counter.mul();
  }

  // Residual relative to the right-hand side. A backward-stable solve keeps
  // |a x - b| near eps |a| |x|, so this trips once |x| blows up.
  const auto ax = a.apply(x);
  double resid = 0.0, bnorm = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    resid = std::max(resid, std::abs(ax[i] - b[i]));
    bnorm = std::max(bnorm, std::abs(b[i]));
  }
  const double denom = bnorm > 0.0 ? bnorm : 1.0;
  if (!std::isfinite(resid) || resid / denom > kDenseSolveResidualTolerance) {
    throw ConditioningError("dense solve residual " + std::to_string(resid) +
                            " exceeds tolerance");
  }
  return x;
}

/// Recover the coefficients on `support` from k consecutive samples
/// x(offset), ..., x(offset + k - 1) by solving F^{-1}(I, J) c = x_I densely.
/// Output is aligned with `support` as given.
template <class Counter = NoOpCounter>
std::vector<Complex> vandermonde_recover(std::span<const Complex> x_samples,
                                         Index offset,
                                         std::span<const Index> support,
                                         const Modulus& n,
                                         Counter&& counter = {}) {
  const std::size_t k = support.size();
  if (x_samples.size() != k) {
    throw InvalidParameterError("need exactly |J| consecutive samples");
  }
  const double inv_n = 1.0 / static_cast<double>(n.value());
  ComplexMatrix a(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      a(i, j) = inverse_root(n.mul(offset + i, support[j]), n) * inv_n;
  return solve_dense(a, x_samples, counter);
}

enum class AliasShape { kConsecutive, kPeriodic };

/// Classify {0..k-1} or {0, n/k, 2n/k, ...}; throws for anything else.
inline AliasShape alias_shape(std::span<const Index> support,
                              const Modulus& n) {
  const std::size_t k = support.size();
  if (k == 0 || k > n.value() || n.value() % k != 0) {
    throw InvalidParameterError("support size must divide n");
  }
  std::vector<Index> sorted(support.begin(), support.end());
  std::sort(sorted.begin(), sorted.end());
  const Index stride = n.value() / k;
  bool consecutive = true, periodic = true;
  for (std::size_t j = 0; j < k; ++j) {
    consecutive = consecutive && sorted[j] == j;
    periodic = periodic && sorted[j] == j * stride;
  }
  if (consecutive) return AliasShape::kConsecutive;
  if (periodic) return AliasShape::kPeriodic;
  throw InvalidParameterError(
      "aliasing recovery needs a consecutive or periodic support");
}

/// k-point FFT shortcut. Consecutive support {0..k-1}: downsample at multiples
/// of n/k, so the k-point DFT sees the spectrum folded without overlap.
/// Periodic support {0, n/k, ...}: the signal has period k, so the first k
/// samples carry everything. Either way c = (n/k) F_k x_I. Output is aligned
/// with `support` as given.
inline std::vector<Complex> aliasing_recover(const FullSignal& x,
                                             std::span<const Index> support) {
  const Modulus& n = x.n;
  const AliasShape shape = alias_shape(support, n);
  const std::size_t k = support.size();
  const Index stride = n.value() / k;
  std::vector<Complex> samples(k);
  for (std::size_t t = 0; t < k; ++t) {
    samples[t] = shape == AliasShape::kConsecutive ? x[t * stride] : x[t];
  }
  const auto folded = full_fft(samples);
  std::vector<Complex> out(k);
  for (std::size_t j = 0; j < k; ++j) {
    const Index bin = shape == AliasShape::kConsecutive ? support[j]
                                                        : support[j] / stride;
    out[j] = folded[bin] * static_cast<double>(stride);
  }
  return out;
}

/// max_i |a_i - b_i| / max(max_i |b_i|, tiny); b is the reference.
inline double max_relative_error(std::span<const Complex> a,
                                 std::span<const Complex> b) {
  if (a.size() != b.size()) return INFINITY;
  double err = 0.0, ref = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    err = std::max(err, std::abs(a[i] - b[i]));
    ref = std::max(ref, std::abs(b[i]));
  }
  return ref > 0.0 ? err / ref : err;
}

inline double max_abs_error(std::span<const Complex> a,
                            std::span<const Complex> b) {
  if (a.size() != b.size()) return INFINITY;
  double err = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    err = std::max(err, std::abs(a[i] - b[i]));
  return err;
}

}  // namespace sfft

#endif  // SFFT_ORACLES_HPP_
