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

// Exact ground truth for small instances.
//
// Feasible sets are enumerated outright, hull vertices are decided by an
// exact phase-1 simplex over the rationals, and the vertex-preservation and
// right-hand-side bound properties of the aggregation are evaluated as
// predicates with counterexamples attached. Nothing here shares code with
// the knapsack DP path it is used to check.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "knapred/bigint.hpp"
#include "knapred/instance.hpp"

namespace knapred::oracle {

inline constexpr std::size_t kDefaultCap = 1'000'000;
inline constexpr std::size_t kDefaultIterationLimit = 100'000;

/// Finite set of distinct integer points of a common dimension.
struct PointSet {
  std::size_t dim = 0;
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }
  bool contains(std::span<const Integer> p) const;
};

/// x0 = sum_i weights[i] * points[indices[i]], weights > 0 summing to 1.
struct ConvexWitness {
  std::vector<std::size_t> indices;
  std::vector<Rational> weights;

  bool operator==(const ConvexWitness&) const = default;
};

struct VertexReport {
  std::vector<std::size_t> vertices;                 // ascending indices into the set
  std::map<std::size_t, ConvexWitness> witnesses;    // non-vertex -> certificate

  bool is_vertex(std::size_t index) const;
};

/// All x with 0 <= x <= U and A x = b, in ascending lexicographic order.
/// U comes from the rows unless `upper` is given. Throws CapExceeded once
/// more than `cap` points are found or more than 64 * cap + 4096 search
/// nodes are visited, and ValidationError for an unbounded column without
/// an explicit bound.
PointSet enumerate_feasible(const Matrix& A, std::span<const Integer> b,
                            std::size_t cap = kDefaultCap,
                            const std::optional<Vector>& upper = std::nullopt);

/// Decides x0 in conv(others) exactly. Returns the certificate when it is.
std::optional<ConvexWitness> check_convex_combination(
    std::span<const Integer> x0, std::span<const Point> others,
    std::size_t iteration_limit = kDefaultIterationLimit);

/// Re-checks a certificate by exact arithmetic.
bool verify_witness(std::span<const Integer> x0, std::span<const Point> points,
                    const ConvexWitness& witness);

/// Vertices of conv(S). Points are examined in order and a point found to
/// be a convex combination of the survivors is removed before the next
/// test; witnesses cite only points of S.
VertexReport vertex_set(const PointSet& S, std::size_t iteration_limit = kDefaultIterationLimit);

enum class OptimumStatus { Optimal, Infeasible, Unbounded };

struct OracleOptimum {
  OptimumStatus status = OptimumStatus::Infeasible;
  Integer value;              // in the instance's own sense
  std::vector<Point> argopt;  // lexicographic; empty unless Optimal
};

/// Optimizes c^T x over the enumerated feasible set in the instance's own
/// sense. All-zero columns are pinned at 0, or make the result Unbounded
/// when their cost improves the objective and the set is nonempty.
OracleOptimum brute_force_optimum(const IPInstance& inst, std::size_t cap = kDefaultCap);

/// Outcome of a property check. `vacuous` marks checks whose hypothesis
/// did not apply (empty feasible set); they hold trivially.
struct CheckResult {
  bool holds = true;
  bool vacuous = false;
  std::optional<Point> counterexample;
  std::string detail;

  explicit operator bool() const { return holds; }
};

/// With f the aggregation vector of b: e^T t has the unique minimizer t = b
/// over {t >= 0 integral : f^T t = f^T b}, and b is a vertex of that set.
CheckResult check_rhs_is_vertex(std::span<const Integer> b, std::size_t cap = kDefaultCap);

/// Every vertex of conv M(A, b) is a vertex of conv M(f^T A, f^T b).
/// Requires an instance without all-zero columns.
CheckResult check_vertex_preservation(const IPInstance& inst, std::size_t cap = kDefaultCap);

/// f^T b >= prod(x0_i + 1) - 1 for every vertex x0 of conv M(A, b).
CheckResult check_vertex_rhs_bound(const IPInstance& inst, std::size_t cap = kDefaultCap);

/// t -> a^T t is injective on the box 0 <= t <= x0. Throws CapExceeded
/// when the box holds more than `cap` points.
bool check_box_injectivity(std::span<const Integer> a, std::span<const Integer> x0,
                           std::size_t cap = kDefaultCap);

/// Everything the checks above compute, evaluated once per instance.
struct Audit {
  PointSet feasible;          // M(A, b)
  VertexReport vertices;
  Vector f;
  Vector a;
  Integer a0;
  PointSet aggregated;        // M(a, a0)
  VertexReport aggregated_vertices;
  CheckResult vertex_preservation;
  CheckResult vertex_rhs_bound;
  CheckResult box_injectivity;  // over every aggregated vertex
};

/// Requires an instance without all-zero columns.
Audit audit_instance(const IPInstance& inst, std::size_t cap = kDefaultCap);

}  // namespace knapred::oracle
