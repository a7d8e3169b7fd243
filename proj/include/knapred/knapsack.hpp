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

// Exact equality-knapsack solver and the end-to-end reduction pipeline.

#include <string>

#include "knapred/aggregation.hpp"
#include "knapred/bigint.hpp"
#include "knapred/dp_kernels.hpp"
#include "knapred/instance.hpp"

namespace knapred {

enum class KnapsackStatus { Optimal, Infeasible, BudgetExceeded };

struct KnapsackSolution {
  Point x;  // empty unless Optimal
  Integer value;
  KnapsackStatus status = KnapsackStatus::Infeasible;
  std::string diagnostic;
};

struct SolverBudget {
  Integer max_rhs{10'000'000};         // cap on a0
  Integer max_cells{1'000'000'000};    // cap on n' * a0
};

struct KnapsackOptions {
  simd::DpKernel kernel = simd::DpKernel::Auto;
  bool exact_only = false;  // skip the machine-word table even when it fits
};

/// Value-indexed DP for min cost^T x s.t. a^T x = a0, x >= 0 integral.
/// Requires a_j > 0 and cost_j >= 0. Among optimal solutions the one
/// returned is found by walking down from a0 and always taking the
/// smallest item index that attains the optimum.
KnapsackSolution solve_knapsack(const KnapsackInstance& K, const SolverBudget& budget = {},
                                const KnapsackOptions& options = {});

enum class SolveStatus { Optimal, Infeasible };

struct Solution {
  SolveStatus status = SolveStatus::Infeasible;
  Point x;            // original column space; empty unless Optimal
  Integer objective;  // c^T x in the instance's own sense
  KnapsackInstance knapsack;
  KnapsackSolution surrogate;
  Point surrogate_point;  // knapsack minimizer lifted to original columns
  Vector residual;        // A * surrogate_point - b when the knapsack was solvable
};

/// canonicalize -> preprocess -> build_knapsack -> solve_knapsack -> lift
/// -> certify A x = b. A knapsack minimizer that misses A x = b proves the
/// original program infeasible.
///
/// Throws UnboundedProblem when a zero column with negative (minimize-form)
/// cost sits next to a feasible remainder, and BudgetExceeded when the
/// aggregated table is too large.
Solution solve_original(const IPInstance& inst, const SolverBudget& budget = {},
                        const KnapsackOptions& options = {});

std::string_view status_name(KnapsackStatus status);
std::string_view status_name(SolveStatus status);

}  // namespace knapred
