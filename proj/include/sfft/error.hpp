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

#ifndef SFFT_ERROR_HPP_
#define SFFT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sfft {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedModulusError : public Error {
 public:
  using Error::Error;
};

class EmptyInputError : public Error {
 public:
  using Error::Error;
};

class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed values: duplicates, out-of-range indices, NaN/Inf samples.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// The dense solver met a (numerically) singular system.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document; `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Sample file indices differ from the canonical sample set.
class IndexMismatchError : public Error {
 public:
  using Error::Error;
};

/// Raised when a support set's digit table is not conforming, i.e. the set
/// size differs from 2^(number of pivots).
class NotSpectralError : public Error {
 public:
  NotSpectralError(std::vector<unsigned> pivots, std::size_t set_size)
      : Error(describe(pivots, set_size)),
        pivots_(std::move(pivots)),
        set_size_(set_size) {}

  const std::vector<unsigned>& pivots() const noexcept { return pivots_; }
  std::size_t set_size() const noexcept { return set_size_; }
  /// 2^|pivots|; saturates for absurd pivot counts.
  std::size_t expected_size() const noexcept {
    return pivots_.size() >= 8 * sizeof(std::size_t)
               ? static_cast<std::size_t>(-1)
               : std::size_t{1} << pivots_.size();
  }

 private:
  static std::string describe(const std::vector<unsigned>& pivots,
                              std::size_t set_size) {
    std::string msg = "support is not spectral: |J| = " +
                      std::to_string(set_size) + " but pivots {";
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (i) msg += ",";
      msg += std::to_string(pivots[i]);
    }
    msg += "} give 2^" + std::to_string(pivots.size());
    return msg;
  }

  std::vector<unsigned> pivots_;
  std::size_t set_size_;
};

}  // namespace sfft

#endif  // SFFT_ERROR_HPP_
