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

#ifndef SFFT_VERIFY_HPP_
#define SFFT_VERIFY_HPP_

// Self-check battery run by `sfft verify`. Each suite draws its instances
// from one seeded generator and reports the worst error it saw.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sfft/butterfly.hpp"
#include "sfft/digit_table.hpp"
#include "sfft/idempotent.hpp"
#include "sfft/oracles.hpp"
#include "sfft/random.hpp"
#include "sfft/spectral_sets.hpp"

namespace sfft::verify {

struct Options {
  unsigned max_log_n = 10;
  unsigned trials = 20;
  std::uint64_t seed = 1;
  double tolerance = 1e-10;
  /// Conjugate every twiddle before checking; a mutation fixture that the
  /// block-identity and equivalence suites must catch.
  bool flip_twiddle_sign = false;
};

inline constexpr double kBlockIdentityTolerance = 1e-12;
inline constexpr double kUnitarityTolerance = 1e-9;
/// Largest log2(k) materialised as a dense matrix inside the battery.
inline constexpr unsigned kMaxDenseLogK = 7;

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double max_error = 0.0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0 && cases > 0; }

  void record(bool ok, double error, const std::string& what) {
    ++cases;
    max_error = std::max(max_error, error);
    if (!ok) {
      if (failures == 0) first_failure = what;
      ++failures;
    }
  }
};

inline ButterflyPlan flip_twiddle_signs(const ButterflyPlan& plan) {
  TwiddleLevels levels = plan.levels();
  for (auto& level : levels)
    for (auto& t : level) t = std::conj(t);
  return ButterflyPlan(plan.support(), plan.samples(), std::move(levels));
}

/// Worst violation over all recursion depths of
///   F(J_1, I_0) = F(J_0, I_0),  F(J_0, I_1) = D F(J_0, I_0),
///   F(J_1, I_1) = -F(J_0, I_1),
/// with D taken from the plan's twiddles.
inline double block_identity_error(const ButterflyPlan& plan) {
  const ComplexMatrix full = submatrix(plan);
  double worst = 0.0;
  for (std::size_t l = 0; l < plan.log_k(); ++l) {
    const std::size_t h = plan.size() >> (l + 1);
    const auto& d = plan.levels()[l];
    for (std::size_t r = 0; r < h; ++r) {
      for (std::size_t c = 0; c < h; ++c) {
        const Complex ul = full(r, c), ur = full(r, c + h);
        const Complex ll = full(r + h, c), lr = full(r + h, c + h);
        worst = std::max({worst, std::abs(ll - ul), std::abs(ur - d[r] * ul),
                          std::abs(lr + ur)});
      }
    }
  }
  return worst;
}

/// Worst |E* E - m I| over the nested leading blocks E of size m = k / 2^l.
inline double recursive_unitarity_error(const ButterflyPlan& plan) {
  const ComplexMatrix full = submatrix(plan);
  double worst = 0.0;
  for (std::size_t m = plan.size(); m >= 1; m /= 2) {
    const auto e = full.block(0, 0, m, m);
    worst = std::max(worst, max_abs_diff(e.adjoint() * e,
                                         ComplexMatrix::identity(
                                             m, static_cast<double>(m))));
    if (m == 1) break;
  }
  return worst;
}

namespace detail {

inline std::string describe(Index n, unsigned r, std::uint64_t seed) {
  std::ostringstream os;
  os << "n=" << n << " r=" << r << " seed=" << seed;
  return os.str();
}

inline std::vector<Complex> random_vector(Rng& rng, std::size_t size) {
  std::vector<Complex> v(size);
  for (auto& x : v) x = rng.complex();
  return v;
}

/// Calls fn(n, r, seed) for `trials` random instances at every n up to
/// 2^max_log_n with r capped at max_r.
template <class Fn>
void for_each_instance(const Options& opt, unsigned max_r, Fn&& fn) {
  Rng rng(opt.seed);
  for (unsigned log_n = 1; log_n <= opt.max_log_n; ++log_n) {
    for (unsigned t = 0; t < opt.trials; ++t) {
      const unsigned r = static_cast<unsigned>(rng.below(std::min(log_n, max_r) + 1));
      fn(Index{1} << log_n, r, rng.next());
    }
  }
}

}  // namespace detail

inline SuiteResult digit_table_suite(const Options& opt) {
  SuiteResult res{"digit_tables"};
  Rng rng(opt.seed ^ 0x9e3779b97f4a7c15ull);
  for (unsigned log_n = 1; log_n <= std::min(opt.max_log_n, 10u); ++log_n) {
    const Modulus n = Modulus::from_log2(log_n);
    for (unsigned t = 0; t < opt.trials; ++t) {
      std::set<Index> chosen;
      const std::size_t size = 1 + rng.below(std::min<Index>(n.value(), 64));
      while (chosen.size() < size) chosen.insert(rng.below(n.value()));
      const std::vector<Index> s(chosen.begin(), chosen.end());
      std::set<unsigned> pairwise;
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
          pairwise.insert(two_adic_valuation(s[b] - s[a]));
      const PivotSet p = pivots_of(s, n);
      const bool ok = p.vector() == std::vector<unsigned>(pairwise.begin(), pairwise.end()) &&
                      (std::size_t{1} << p.size()) >= s.size();
      res.record(ok, 0.0, "pivot mismatch at n=" + std::to_string(n.value()));
    }
  }
  return res;
}

inline SuiteResult sample_plan_suite(const Options& opt) {
  SuiteResult res{"sample_plans"};
  detail::for_each_instance(opt, kMaxDenseLogK, [&](Index n, unsigned r, std::uint64_t seed) {
    const auto j = random_spectral_support(n, r, seed);
    const auto i = build_sample_plan(j);
    bool ok = i.size() == j.size() && i[0] == 0 && is_conforming(i.as_index_set()) &&
              pivots_of(i.as_index_set()) == dual_pivots(j.pivots(), j.modulus()) &&
              check_unitary_pair(j.as_index_set(), i.as_index_set());
    res.record(ok, 0.0, detail::describe(n, r, seed));
  });
  return res;
}

inline SuiteResult block_identity_suite(const Options& opt) {
  SuiteResult res{"block_identities"};
  detail::for_each_instance(opt, kMaxDenseLogK, [&](Index n, unsigned r, std::uint64_t seed) {
    auto plan = build_plan(random_spectral_support(n, r, seed));
    if (opt.flip_twiddle_sign) plan = flip_twiddle_signs(plan);
    const double blocks = block_identity_error(plan);
    const double unitary = recursive_unitarity_error(plan);
    res.record(blocks <= kBlockIdentityTolerance && unitary <= kUnitarityTolerance,
               blocks, detail::describe(n, r, seed));
  });
  return res;
}

inline SuiteResult oracle_equivalence_suite(const Options& opt) {
  SuiteResult res{"oracle_equivalence"};
  Rng values(opt.seed + 1);
  detail::for_each_instance(opt, 12, [&](Index n, unsigned r, std::uint64_t seed) {
    const auto support = random_spectral_support(n, r, seed);
    auto plan = build_plan(support);
    if (opt.flip_twiddle_sign) plan = flip_twiddle_signs(plan);
    const auto c = detail::random_vector(values, support.size());
    const auto x = synthesize(support.elements(), c, plan.samples().elements(),
                              support.modulus());
    const double err = max_relative_error(transform(plan, x), c);
    res.record(err <= opt.tolerance, err, detail::describe(n, r, seed));
  });
  return res;
}

inline SuiteResult radix2_suite(const Options& opt) {
  SuiteResult res{"radix2_reduction"};
  Rng values(opt.seed + 2);
  for (unsigned log_n = 0; log_n <= opt.max_log_n; ++log_n) {
    const Modulus n = Modulus::from_log2(log_n);
    const auto plan = build_plan(validate_support(IndexSet::full(n)));
    bool order_ok = true;
    for (Index p = 0; p < n.value(); ++p)
      order_ok = order_ok && plan.samples()[p] == reverse_bits(p, log_n);
    const auto signal = detail::random_vector(values, n.value());
    std::vector<Complex> x;
    for (Index i : plan.samples().elements()) x.push_back(signal[i]);
    const double err = max_abs_error(transform(plan, x), full_fft(signal));
    res.record(order_ok && err <= opt.tolerance, err,
               "n=" + std::to_string(n.value()));
  }
  return res;
}

inline SuiteResult idempotent_suite(const Options& opt) {
  SuiteResult res{"idempotents"};
  detail::for_each_instance(
      Options{std::min(opt.max_log_n, 8u), opt.trials, opt.seed + 3},
      64, [&](Index n, unsigned r, std::uint64_t seed) {
        const auto support = random_spectral_support(n, r, seed);
        const auto h = idempotent_of(support.as_index_set());
        // h * h via the convolution theorem: F(h * h) = (F h)^2 = 1_J.
        const auto spectrum = full_fft(h.values);
        std::vector<Complex> squared(spectrum.size());
        for (std::size_t m = 0; m < spectrum.size(); ++m)
          squared[m] = spectrum[m] * spectrum[m];
        const double err = max_abs_error(inverse_full_fft(squared), h.values);
        bool zeros_ok = true;
        for (Index i = 0; i < n; ++i)
          zeros_ok = zeros_ok && h.vanishes_at(i) ==
                                     (h.zero_divisors.count(gcd_with(i, h.n)) == 1);
        res.record(err <= opt.tolerance && zeros_ok, err,
                   detail::describe(n, r, seed));
      });
  return res;
}

/// Exhaustive at n = 8: sizes 2 and 4 have a unitary partner iff conforming.
inline SuiteResult converse_suite(const Options&) {
  SuiteResult res{"converse_n8"};
  const Modulus n(8);
  for (unsigned size : {2u, 4u}) {
    std::vector<std::vector<Index>> sets;
    for (unsigned mask = 0; mask < 256; ++mask) {
      if (static_cast<unsigned>(std::popcount(mask)) != size) continue;
      std::vector<Index> s;
      for (Index i = 0; i < 8; ++i)
        if (mask >> i & 1u) s.push_back(i);
      sets.push_back(std::move(s));
    }
    for (const auto& j : sets) {
      const IndexSet js(n, j);
      bool partner = false;
      for (const auto& i : sets)
        if (check_unitary_pair(js, IndexSet(n, i))) {
          partner = true;
          break;
        }
      bool ok = partner == is_conforming(js);
      if (ok && partner) {
        ok = check_unitary_pair(
            js, build_sample_plan(validate_support(js)).as_index_set());
      }
      res.record(ok, 0.0, "n=8 size=" + std::to_string(size));
    }
  }
  return res;
}

inline SuiteResult operation_count_suite(const Options& opt) {
  SuiteResult res{"operation_counts"};
  Rng values(opt.seed + 4);
  for (unsigned r = 0; r <= std::min(opt.max_log_n, 12u); ++r) {
    const auto plan = build_plan(random_spectral_support(Index{1} << std::max(r, opt.max_log_n), r, opt.seed + r));
    OpCounter counter;
    transform(plan, detail::random_vector(values, plan.size()), counter);
    const std::uint64_t k = plan.size();
    res.record(counter.total() == operation_count(plan) &&
                   operation_count(plan) <= 2 * k * r,
               0.0, "k=" + std::to_string(k));
  }
  return res;
}

inline std::vector<SuiteResult> run_all(const Options& opt) {
  return {digit_table_suite(opt),        sample_plan_suite(opt),
          block_identity_suite(opt),     oracle_equivalence_suite(opt),
          radix2_suite(opt),             idempotent_suite(opt),
          converse_suite(opt),           operation_count_suite(opt)};
}

}  // namespace sfft::verify

#endif  // SFFT_VERIFY_HPP_
