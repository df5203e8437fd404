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

#ifndef SFFT_COUNTERS_HPP_
#define SFFT_COUNTERS_HPP_

#include <cstdint>

namespace sfft {

/// Counter policy that compiles away.
struct NoOpCounter {
  constexpr void add() noexcept {}
  constexpr void mul() noexcept {}
};

/// Counts complex additions/subtractions and multiplications/divisions.
struct OpCounter {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  void add() noexcept { ++adds; }
  void mul() noexcept { ++muls; }
  std::uint64_t total() const noexcept { return adds + muls; }
};

}  // namespace sfft

#endif  // SFFT_COUNTERS_HPP_
