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

// Integer-program instances: min/max c^T x  s.t.  A x = b,  x >= 0 integral,
// with A and b nonnegative.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "knapred/bigint.hpp"

namespace knapred {

enum class Sense { Minimize, Maximize };

struct IPInstance {
  Matrix A;  // m x n, entries >= 0
  Vector b;  // m, entries >= 0
  Vector c;  // n, any sign
  Sense sense = Sense::Minimize;

  std::size_t rows() const { return A.size(); }
  std::size_t cols() const { return c.size(); }

  bool operator==(const IPInstance&) const = default;
};

/// Per-variable upper bounds implied by the nonnegative rows. An entry is
/// nullopt exactly when the column of A is all zeros.
struct BoxBounds {
  std::vector<std::optional<Integer>> upper;

  bool all_finite() const;
};

struct DroppedColumn {
  std::size_t column;  // index in the original instance
  std::string reason;

  bool operator==(const DroppedColumn&) const = default;
};

/// An instance with all-zero columns removed. `inner` may have zero
/// columns when every column of A was zero.
struct ReducedInstance {
  IPInstance inner;
  std::vector<DroppedColumn> dropped;
  std::vector<std::size_t> column_map;  // reduced index -> original index
  std::size_t original_cols = 0;

  /// Expands a point over the kept columns to the original column space;
  /// dropped coordinates become 0.
  Point lift(std::span<const Integer> reduced_x) const;
};

struct Evaluation {
  Vector residual;  // A x - b
  Integer objective;  // c^T x
  bool feasible = false;
};

/// Parses the instance JSON format and validates it.
IPInstance parse_instance(std::string_view text);

/// Canonical JSON encoding accepted by parse_instance.
std::string serialize_instance(const IPInstance& inst);

/// Throws ValidationError/DimensionMismatch on violated invariants.
void validate(const IPInstance& inst);

BoxBounds box_bounds(const IPInstance& inst);

/// Column sums e^T A.
Vector column_sums(const Matrix& A, std::size_t cols);

std::vector<std::size_t> zero_columns(const IPInstance& inst);

/// Drops all-zero columns with nonnegative cost. Requires sense Minimize.
/// Throws UnboundedProblem when an all-zero column has negative cost.
ReducedInstance preprocess_zero_columns(const IPInstance& inst);

/// Drops every all-zero column regardless of cost. Used where the objective
/// is irrelevant (vertex structure of the feasible set).
ReducedInstance drop_zero_columns(const IPInstance& inst);

Evaluation evaluate(const IPInstance& inst, std::span<const Integer> x);

/// Returns the equivalent minimization instance (c negated for Maximize).
IPInstance canonicalize(const IPInstance& inst);

/// Row i of the result is row perm[i] of the input.
IPInstance permute_rows(const IPInstance& inst, std::span<const std::size_t> perm);

}  // namespace knapred
