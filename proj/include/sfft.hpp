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

#ifndef SFFT_SFFT_HPP_
#define SFFT_SFFT_HPP_

#include "sfft/butterfly.hpp"
#include "sfft/counters.hpp"
#include "sfft/digit_table.hpp"
#include "sfft/error.hpp"
#include "sfft/idempotent.hpp"
#include "sfft/matrix.hpp"
#include "sfft/modulus.hpp"
#include "sfft/oracles.hpp"
#include "sfft/random.hpp"
#include "sfft/spectral_sets.hpp"

#endif  // SFFT_SFFT_HPP_
