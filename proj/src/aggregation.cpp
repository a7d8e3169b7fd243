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

#include "knapred/aggregation.hpp"

#include <algorithm>

#include "knapred/errors.hpp"

namespace knapred {

Vector aggregation_vector(std::span<const Integer> b) {
  Vector f;
  f.reserve(b.size());
  Integer running = 1;
  for (const auto& bi : b) {
    f.push_back(running);
    running *= bi + 1;
  }
  return f;
}

AggregatedRow aggregate(const Matrix& A, std::span<const Integer> b) {
  if (A.size() != b.size()) throw DimensionMismatch("aggregate: A and b disagree on m");
  const Vector f = aggregation_vector(b);
  const std::size_t n = A.empty() ? 0 : A.front().size();
  AggregatedRow row;
  row.a.assign(n, Integer(0));
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) row.a[j] += f[i] * A[i][j];
  }
  row.a0 = dot(f, b);
  return row;
}

AggregatedRow aggregate(const ReducedInstance& inst) { return aggregate(inst.inner.A, inst.inner.b); }

Integer aggregated_rhs_closed_form(std::span<const Integer> b) {
  Integer p = 1;
  for (const auto& bi : b) p *= bi + 1;
  return p - 1;
}

Integer penalty_k(std::span<const Integer> c, const Matrix& A) {
  const Vector sums = column_sums(A, c.size());
  Integer k = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (sgn(sums[j]) <= 0) throw ValidationError("penalty_k: column " + std::to_string(j) + " is zero");
    if (sgn(c[j]) >= 0) continue;
    Integer need;
    Integer neg = -c[j];
    mpz_cdiv_q(need.get_mpz_t(), neg.get_mpz_t(), sums[j].get_mpz_t());
    if (need > k) k = need;
  }
  return k;
}

Integer upper_bound_L(const ReducedInstance& inst, const BoxBounds& box) {
  const auto& c = inst.inner.c;
  if (box.upper.size() != c.size()) throw DimensionMismatch("upper_bound_L: box size");
  Integer L = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (sgn(c[j]) <= 0) continue;
    if (!box.upper[j]) throw ValidationError("upper_bound_L: unbounded column " + std::to_string(j));
    L += c[j] * *box.upper[j];
  }
  return L;
}

Integer penalty_H(const Integer& L, const Integer& k, std::span<const Integer> b) {
  Integer total = 0;
  for (const auto& bi : b) total += bi;
  return L + k * total + 1;
}

KnapsackInstance build_knapsack(const IPInstance& inst) {
  validate(inst);
  auto reduced = preprocess_zero_columns(inst);  // rejects Maximize
  const auto& inner = reduced.inner;

  KnapsackInstance K;
  auto row = aggregate(reduced);
  K.a = std::move(row.a);
  K.a0 = std::move(row.a0);

  auto& meta = K.meta;
  meta.f = aggregation_vector(inner.b);
  meta.k = penalty_k(inner.c, inner.A);
  meta.L = upper_bound_L(reduced, box_bounds(inner));
  // With b = 0 the formula can fall below k + 1 and leave negative costs.
  // The only aggregated point is then x = 0, so raising H changes nothing
  // but keeps the surrogate a valid nonnegative-cost knapsack.
  meta.H = std::max(penalty_H(meta.L, meta.k, inner.b), Integer(meta.k + 1));
  meta.column_map = std::move(reduced.column_map);
  meta.dropped = std::move(reduced.dropped);
  meta.original = std::make_shared<const IPInstance>(inst);

  const Vector sums = column_sums(inner.A, inner.cols());
  K.cost.reserve(inner.cols());
  for (std::size_t j = 0; j < inner.cols(); ++j) K.cost.push_back(inner.c[j] + meta.H * sums[j]);
  return K;
}

Integer vertex_lower_bound(std::span<const Integer> x0) {
  Integer p = 1;
  for (const auto& xi : x0) {
    if (sgn(xi) < 0) throw ValidationError("vertex_lower_bound: negative coordinate");
    p *= xi + 1;
  }
  return p - 1;
}

}  // namespace knapred
