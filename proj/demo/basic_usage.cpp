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

// Recover the coefficients of a signal with a known spectral support from
// k samples, then check them against a full FFT of the whole signal.

#include <cstdio>
#include <vector>

#include "sfft.hpp"

int main() {
  using namespace sfft;
  const Modulus n(1024);
  const auto support = validate_support(IndexSet(n, {161, 545, 636, 1020}));
  const auto plan = build_plan(support);

  // x(i) = (1/n) sum_j c_j e^{2 pi i ij/n}
  const std::vector<Complex> c{{1, 0}, {0, 2}, {-1, 0.5}, {3, -1}};
  const auto signal = synthesize_full(support.elements(), c, n);

  std::vector<Complex> x;
  for (Index i : plan.samples().elements()) x.push_back(signal.values[i]);
  OpCounter ops;
  const auto recovered = transform(plan, x, ops);
  const auto reference = full_fft(signal.values);

  std::printf("samples read: %zu of %llu\n", x.size(),
              static_cast<unsigned long long>(n.value()));
  for (std::size_t j = 0; j < plan.size(); ++j) {
    const Index m = support[j];
    std::printf("c[%4llu] = %+.6f %+.6fi   full FFT %+.6f %+.6fi\n",
                static_cast<unsigned long long>(m), recovered[j].real(), recovered[j].imag(),
                reference[m].real(), reference[m].imag());
  }
  std::printf("operations: %llu adds, %llu muls\n", static_cast<unsigned long long>(ops.adds),
              static_cast<unsigned long long>(ops.muls));
  return 0;
}
