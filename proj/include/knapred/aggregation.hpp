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

// Collapses the m equality rows of an instance into one knapsack row.
//
// The weights f_1 = 1, f_{i+1} = f_i * (b_i + 1) turn A x = b into the single
// constraint (f^T A) x = f^T b. Every vertex of conv{x >= 0 integral : A x = b}
// stays a vertex of the aggregated set, and minimizing the penalized cost
// c + H * e^T A over the aggregated set lands back inside the original
// feasible set whenever that set is nonempty.

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "knapred/bigint.hpp"
#include "knapred/instance.hpp"

namespace knapred {

struct AggregatedRow {
  Vector a;    // f^T A
  Integer a0;  // f^T b
};

struct KnapsackMeta {
  Integer L;  // upper bound on the original minimum
  Integer k;  // smallest shift with c + k e^T A >= 0
  Integer H;  // max(L + k e^T b + 1, k + 1)
  Vector f;
  std::vector<std::size_t> column_map;  // knapsack index -> original column
  std::vector<DroppedColumn> dropped;
  std::shared_ptr<const IPInstance> original;  // canonical (minimize) form
};

/// min cost^T x  s.t.  a^T x = a0, x >= 0 integral.
struct KnapsackInstance {
  Vector a;
  Integer a0;
  Vector cost;
  KnapsackMeta meta;
};

/// f_1 = 1, f_{i+1} = f_i (b_i + 1).
Vector aggregation_vector(std::span<const Integer> b);

AggregatedRow aggregate(const Matrix& A, std::span<const Integer> b);
AggregatedRow aggregate(const ReducedInstance& inst);

/// prod(b_i + 1) - 1, the closed form of f^T b.
Integer aggregated_rhs_closed_form(std::span<const Integer> b);

/// Smallest k >= 0 with c_j + k (e^T A)_j >= 0 for every column.
/// Every column of A must be nonzero.
Integer penalty_k(std::span<const Integer> c, const Matrix& A);

/// sum_j max(0, c_j) U_j; bounds c^T x from above on the whole feasible set.
Integer upper_bound_L(const ReducedInstance& inst, const BoxBounds& box);

Integer penalty_H(const Integer& L, const Integer& k, std::span<const Integer> b);

/// Preprocess, aggregate, and attach the penalized cost. `inst` must be in
/// minimize form. Throws UnboundedProblem from preprocessing.
KnapsackInstance build_knapsack(const IPInstance& inst);

/// prod(x0_i + 1) - 1. A single-row constraint that keeps x0 as a vertex
/// needs a right-hand side at least this large.
Integer vertex_lower_bound(std::span<const Integer> x0);

}  // namespace knapred
