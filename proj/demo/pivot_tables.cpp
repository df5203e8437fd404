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

// Print the digit table of a support set with its pivot columns marked,
// followed by the canonical sample set.

#include <cstdio>
#include <cstdlib>
#include <vector>

#include "sfft.hpp"

int main(int argc, char** argv) {
  using namespace sfft;
  Modulus n(1024);
  std::vector<Index> set{252, 296, 472, 508, 552, 684, 728, 940};
  if (argc > 2) {
    n = Modulus(std::strtoull(argv[1], nullptr, 10));
    set.clear();
    for (int a = 2; a < argc; ++a) set.push_back(std::strtoull(argv[a], nullptr, 10));
  }
  const IndexSet j(n, set);
  const auto pivots = pivots_of(j);

  for (unsigned d = n.log2(); d-- > 0;) std::printf("%c", pivots.contains(d) ? 'P' : '.');
  std::printf("\n");
  for (Index m : j.elements()) {
    const auto digits = digits_of(m, n.value());
    for (unsigned d = n.log2(); d-- > 0;) std::printf("%d", digits[d]);
    std::printf("  %llu\n", static_cast<unsigned long long>(m));
  }
  if (!is_conforming(j)) {
    std::printf("not conforming: %zu pivots for %zu elements\n", pivots.size(), j.size());
    return 1;
  }
  const auto samples = build_sample_plan(validate_support(j));
  std::printf("samples:");
  for (Index i : samples.elements()) std::printf(" %llu", static_cast<unsigned long long>(i));
  std::printf("\n");
  return 0;
}
