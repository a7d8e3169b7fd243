// Copyright 2026 The knapred Authors
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

#include "knapred/bigint.hpp"

#include <cassert>
#include <limits>

namespace knapred {

std::optional<Integer> parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && text[0] == '-') pos = 1;
  if (pos == text.size()) return std::nullopt;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  }
  Integer value;
  if (value.set_str(std::string(text), 10) != 0) return std::nullopt;
  return value;
}

std::string to_decimal(const Integer& value) { return value.get_str(10); }

std::string to_decimal(const Rational& value) { return value.get_str(10); }

std::vector<std::string> to_decimal(std::span<const Integer> values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

Rational make_rational(const Integer& num, const Integer& den) {
  assert(den != 0);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer dot(std::span<const Integer> u, std::span<const Integer> v) {
  assert(u.size() == v.size());
  Integer acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
  return acc;
}

bool fits_int64(const Integer& value) {
  static const Integer lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const Integer hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return value >= lo && value <= hi;
}

std::int64_t to_int64(const Integer& value) {
  assert(fits_int64(value));
  // mpz_get_si is only guaranteed for long; go through the string on
  // platforms where long is 32 bits.
  if constexpr (sizeof(long) == sizeof(std::int64_t)) {
    return static_cast<std::int64_t>(value.get_si());
  } else {
    return std::stoll(value.get_str());
  }
}

}  // namespace knapred
