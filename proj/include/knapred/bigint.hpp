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

#pragma once

// Exact integer and rational scalars used throughout knapred.
//
// Aggregated right-hand sides grow like prod(b_i + 1), so nothing in the
// library is allowed to touch a fixed-width integer unless it has first
// proven that the value fits.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace knapred {

using Integer = mpz_class;
using Rational = mpq_class;

using Vector = std::vector<Integer>;
using Matrix = std::vector<Vector>;  // row-major
using Point = std::vector<Integer>;

/// Parses `-?[0-9]+`. Anything else (signs other than a leading ASCII
/// hyphen, whitespace, decimal points, exponents) yields nullopt.
std::optional<Integer> parse_decimal(std::string_view text);

std::string to_decimal(const Integer& value);

/// "p" for integral values, "p/q" otherwise; always in lowest terms.
std::string to_decimal(const Rational& value);

std::vector<std::string> to_decimal(std::span<const Integer> values);

/// num/den reduced to lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

Integer dot(std::span<const Integer> u, std::span<const Integer> v);

/// Fits in a signed 64-bit integer.
bool fits_int64(const Integer& value);
std::int64_t to_int64(const Integer& value);

}  // namespace knapred
