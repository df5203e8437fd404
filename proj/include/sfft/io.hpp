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

#ifndef SFFT_IO_HPP_
#define SFFT_IO_HPP_

// Interchange formats.
//
//   support document   {"n": <int>, "support": [<int>, ...]}
//   sample/coefficient "index,re,im" header, then one record per line with
//   records            values printed to 17 significant digits.

#include <bit>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <iomanip>
#include <istream>
#include <iterator>
#include <system_error>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sfft/digit_table.hpp"
#include "sfft/error.hpp"
#include "sfft/modulus.hpp"

namespace sfft::io {

inline std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  if (offset > text.size()) offset = text.size();
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset; ++i) line += text[i] == '\n';
  return line;
}

/// Parse a support document. Structural problems are ParseError; invalid
/// moduli and duplicate/out-of-range indices keep their own error types.
inline IndexSet parse_support(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(line_of_offset(text, e.byte ? e.byte - 1 : 0),
                     "malformed support document");
  }
  if (!doc.is_object()) throw ParseError(1, "support document must be an object");
  auto locate = [&](const char* key) {
    const auto pos = text.find("\"" + std::string(key) + "\"");
    return pos == std::string_view::npos ? 0 : line_of_offset(text, pos);
  };
  if (!doc.contains("n") || !doc["n"].is_number_unsigned()) {
    throw ParseError(locate("n"), "field \"n\" must be a non-negative integer");
  }
  if (!doc.contains("support") || !doc["support"].is_array()) {
    throw ParseError(locate("support"), "field \"support\" must be an array");
  }
  std::vector<Index> elements;
  for (const auto& v : doc["support"]) {
    if (!v.is_number_unsigned()) {
      throw ParseError(locate("support"),
                       "support entries must be non-negative integers");
    }
    elements.push_back(v.get<Index>());
  }
  const Index n = doc["n"].get<Index>();
  if (n == 0 || !std::has_single_bit(n)) {
    throw ParseError(locate("n"), "n must be a power of two, got " + std::to_string(n));
  }
  return IndexSet(Modulus(n), std::move(elements));
}

inline IndexSet read_support(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), {}};
  return parse_support(text);
}

inline void write_support(std::ostream& out, const Modulus& n,
                          std::span<const Index> elements) {
  nlohmann::json doc;
  doc["n"] = n.value();
  doc["support"] = std::vector<Index>(elements.begin(), elements.end());
  out << doc.dump() << '\n';
}

struct ComplexRecord {
  Index index = 0;
  Complex value;
};

inline constexpr std::string_view kRecordHeader = "index,re,im";

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

inline double parse_double(std::string_view field, std::size_t line) {
  field = trim(field);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line, "bad number '" + std::string(field) + "'");
  }
  return v;
}

inline Index parse_index(std::string_view field, std::size_t line) {
  field = trim(field);
  Index v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
    throw ParseError(line, "bad index '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace detail

/// Read "index,re,im" records. Blank lines are skipped.
inline std::vector<ComplexRecord> read_records(std::istream& in) {
  std::vector<ComplexRecord> records;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view body = detail::trim(line);
    if (body.empty()) continue;
    if (!header) {
      if (body != kRecordHeader) {
        throw ParseError(lineno, "expected header '" +
                                     std::string(kRecordHeader) + "'");
      }
      header = true;
      continue;
    }
    const auto c1 = body.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : body.find(',', c1 + 1);
    if (c2 == std::string_view::npos || body.find(',', c2 + 1) != std::string_view::npos) {
      throw ParseError(lineno, "expected three comma-separated fields");
    }
    ComplexRecord r;
    r.index = detail::parse_index(body.substr(0, c1), lineno);
    r.value = {detail::parse_double(body.substr(c1 + 1, c2 - c1 - 1), lineno),
               detail::parse_double(body.substr(c2 + 1), lineno)};
    records.push_back(r);
  }
  if (!header) throw ParseError(lineno ? lineno : 1, "missing header");
  return records;
}

inline void write_records(std::ostream& out,
                          std::span<const ComplexRecord> records) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << kRecordHeader << '\n' << std::setprecision(17);
  for (const auto& r : records) {
    out << r.index << ',' << r.value.real() << ',' << r.value.imag() << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

inline std::vector<ComplexRecord> zip_records(std::span<const Index> indices,
                                              std::span<const Complex> values) {
  if (indices.size() != values.size()) {
    throw InvalidParameterError("index and value counts differ");
  }
  std::vector<ComplexRecord> out(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) out[i] = {indices[i], values[i]};
  return out;
}

}  // namespace sfft::io

#endif  // SFFT_IO_HPP_
