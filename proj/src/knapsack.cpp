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

#include "knapred/knapsack.hpp"

#include <algorithm>
#include <optional>

#include "knapred/errors.hpp"

namespace knapred {

namespace {

std::string budget_diagnostic(const KnapsackInstance& K, const std::string& what) {
  std::string msg = what + ": aggregated right-hand side a0 = " + to_decimal(K.a0);
  if (K.meta.original) {
    msg += " = prod(b_i + 1) - 1 over b = (";
    const auto& b = K.meta.original->b;
    for (std::size_t i = 0; i < b.size(); ++i) msg += (i ? "," : "") + to_decimal(b[i]);
    msg += ")";
  }
  return msg;
}

// Walks down from a0 taking the smallest item index that attains the
// optimum. `value(v)` returns nullopt for unreachable cells.
template <class Lookup, class Add>
Point reconstruct(const KnapsackInstance& K, std::int64_t rhs, Lookup&& value, Add&& plus_cost) {
  Point x(K.a.size(), Integer(0));
  std::int64_t v = rhs;
  while (v > 0) {
    const auto here = value(v);
    bool stepped = false;
    for (std::size_t j = 0; j < K.a.size(); ++j) {
      if (K.a[j] > v) continue;
      const std::int64_t w = to_int64(K.a[j]);
      const auto prev = value(v - w);
      if (!prev) continue;
      if (plus_cost(*prev, j) == *here) {
        x[j] += 1;
        v -= w;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw Error("knapsack reconstruction failed (inconsistent table)");
  }
  return x;
}

}  // namespace

KnapsackSolution solve_knapsack(const KnapsackInstance& K, const SolverBudget& budget,
                                const KnapsackOptions& options) {
  if (K.a.size() != K.cost.size()) throw DimensionMismatch("knapsack: |a| != |cost|");
  if (sgn(K.a0) < 0) throw ValidationError("knapsack: a0 is negative");
  for (std::size_t j = 0; j < K.a.size(); ++j) {
    if (sgn(K.a[j]) <= 0) throw ValidationError("knapsack: a[" + std::to_string(j) + "] <= 0");
    if (sgn(K.cost[j]) < 0) throw ValidationError("knapsack: cost[" + std::to_string(j) + "] < 0");
  }

  KnapsackSolution sol;
  if (K.a0 > budget.max_rhs) {
    sol.status = KnapsackStatus::BudgetExceeded;
    sol.diagnostic = budget_diagnostic(K, "a0 exceeds max_rhs " + to_decimal(budget.max_rhs));
    return sol;
  }
  if (Integer(static_cast<unsigned long>(K.a.size())) * K.a0 > budget.max_cells) {
    sol.status = KnapsackStatus::BudgetExceeded;
    sol.diagnostic = budget_diagnostic(K, "n' * a0 exceeds max_cells " + to_decimal(budget.max_cells));
    return sol;
  }
  if (!fits_int64(K.a0)) {
    sol.status = KnapsackStatus::BudgetExceeded;
    sol.diagnostic = budget_diagnostic(K, "a0 does not fit a table index");
    return sol;
  }

  const std::int64_t rhs = to_int64(K.a0);
  std::vector<std::size_t> usable;
  for (std::size_t j = 0; j < K.a.size(); ++j) {
    if (K.a[j] <= rhs) usable.push_back(j);
  }

  Integer max_cost = 0;
  for (std::size_t j : usable) max_cost = std::max(max_cost, K.cost[j]);
  const bool machine =
      !options.exact_only && max_cost * rhs < Integer(std::to_string(simd::kUnreachable));

  if (machine) {
    std::vector<std::int64_t> w, c;
    for (std::size_t j : usable) {
      w.push_back(to_int64(K.a[j]));
      c.push_back(to_int64(K.cost[j]));
    }
    const auto table = simd::min_cost_table(options.kernel, w, c, rhs);
    if (!table.reachable(rhs)) {
      sol.status = KnapsackStatus::Infeasible;
      return sol;
    }
    auto lookup = [&](std::int64_t v) -> std::optional<std::int64_t> {
      if (!table.reachable(v)) return std::nullopt;
      return table[v];
    };
    auto plus = [&](std::int64_t prev, std::size_t j) { return prev + to_int64(K.cost[j]); };
    sol.x = reconstruct(K, rhs, lookup, plus);
    sol.value = Integer(std::to_string(table[rhs]));
  } else {
    std::vector<std::optional<Integer>> g(static_cast<std::size_t>(rhs) + 1);
    g[0] = Integer(0);
    for (std::int64_t v = 1; v <= rhs; ++v) {
      std::optional<Integer> best;
      for (std::size_t j : usable) {
        const std::int64_t w = to_int64(K.a[j]);
        if (w > v) continue;
        const auto& prev = g[static_cast<std::size_t>(v - w)];
        if (!prev) continue;
        Integer cand = *prev + K.cost[j];
        if (!best || cand < *best) best = std::move(cand);
      }
      g[static_cast<std::size_t>(v)] = std::move(best);
    }
    if (!g[static_cast<std::size_t>(rhs)]) {
      sol.status = KnapsackStatus::Infeasible;
      return sol;
    }
    auto lookup = [&](std::int64_t v) -> const std::optional<Integer>& {
      return g[static_cast<std::size_t>(v)];
    };
    auto plus = [&](const Integer& prev, std::size_t j) { return Integer(prev + K.cost[j]); };
    sol.x = reconstruct(K, rhs, lookup, plus);
    sol.value = *g[static_cast<std::size_t>(rhs)];
  }
  sol.status = KnapsackStatus::Optimal;
  return sol;
}

Solution solve_original(const IPInstance& inst, const SolverBudget& budget,
                        const KnapsackOptions& options) {
  validate(inst);
  const IPInstance canon = canonicalize(inst);

  KnapsackInstance K;
  try {
    K = build_knapsack(canon);
  } catch (const UnboundedProblem&) {
    // Only unbounded if the rest is feasible: re-solve with the offending
    // costs zeroed (those columns then drop out as fixed at 0).
    IPInstance rest = inst;
    for (std::size_t j : zero_columns(canon)) {
      if (sgn(canon.c[j]) < 0) rest.c[j] = 0;
    }
    Solution probe = solve_original(rest, budget, options);
    if (probe.status == SolveStatus::Infeasible) return probe;
    throw;
  }

  Solution sol;
  sol.surrogate = solve_knapsack(K, budget, options);
  sol.knapsack = std::move(K);
  const auto& meta = sol.knapsack.meta;

  switch (sol.surrogate.status) {
    case KnapsackStatus::BudgetExceeded:
      throw BudgetExceeded(sol.surrogate.diagnostic);
    case KnapsackStatus::Infeasible:
      sol.status = SolveStatus::Infeasible;
      return sol;
    case KnapsackStatus::Optimal:
      break;
  }

  Point lifted(inst.cols(), Integer(0));
  for (std::size_t j = 0; j < meta.column_map.size(); ++j) {
    lifted[meta.column_map[j]] = sol.surrogate.x[j];
  }
  const Evaluation ev = evaluate(inst, lifted);
  sol.surrogate_point = lifted;
  sol.residual = ev.residual;
  if (!ev.feasible) {
    sol.status = SolveStatus::Infeasible;
    return sol;
  }
  sol.status = SolveStatus::Optimal;
  sol.x = std::move(lifted);
  sol.objective = ev.objective;
  return sol;
}

std::string_view status_name(KnapsackStatus status) {
  switch (status) {
    case KnapsackStatus::Optimal: return "optimal";
    case KnapsackStatus::Infeasible: return "infeasible";
    case KnapsackStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "unknown";
}

std::string_view status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
  }
  return "unknown";
}

}  // namespace knapred
