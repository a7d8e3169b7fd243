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

#include "knapred/hull_oracle.hpp"

#include <algorithm>

#include "knapred/aggregation.hpp"
#include "knapred/errors.hpp"
#include "oracle_internal.hpp"

namespace knapred::oracle {

namespace {

bool lex_less(const Point& l, const Point& r) {
  return std::lexicographical_compare(l.begin(), l.end(), r.begin(), r.end());
}

std::string format_point(std::span<const Integer> p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_decimal(p[i]);
  return s + ")";
}

class Enumerator {
 public:
  Enumerator(const Matrix& A, std::span<const Integer> b, std::size_t cap, Vector upper)
      : A_(A), m_(b.size()), n_(upper.size()), cap_(cap), node_cap_(64 * cap + 4096),
        upper_(std::move(upper)), residual_(b.begin(), b.end()), x_(n_, Integer(0)) {
    // open_[j][i]: some column j' >= j has A[i][j'] > 0.
    open_.assign(n_ + 1, std::vector<bool>(m_, false));
    for (std::size_t j = n_; j-- > 0;) {
      for (std::size_t i = 0; i < m_; ++i) open_[j][i] = open_[j + 1][i] || sgn(A_[i][j]) > 0;
    }
    out_.dim = n_;
  }

  PointSet run() {
    if (n_ == 0) {
      if (std::all_of(residual_.begin(), residual_.end(), [](const Integer& r) { return sgn(r) == 0; })) {
        out_.points.emplace_back();
      }
      return std::move(out_);
    }
    descend(0);
    return std::move(out_);
  }

 private:
  void tick() {
    if (++nodes_ > node_cap_) {
      throw CapExceeded("enumeration visited more than " + std::to_string(node_cap_) + " nodes");
    }
  }

  void emit() {
    if (out_.points.size() >= cap_) {
      throw CapExceeded("feasible set has more than " + std::to_string(cap_) + " points");
    }
    out_.points.push_back(x_);
  }

  void descend(std::size_t j) {
    tick();
    if (j + 1 == n_) {
      finish_last();
      return;
    }
    const Vector saved = residual_;
    for (Integer t = 0; t <= upper_[j]; ++t) {
      if (t > 0) {
        bool negative = false;
        for (std::size_t i = 0; i < m_; ++i) {
          residual_[i] -= A_[i][j];
          if (sgn(residual_[i]) < 0) negative = true;
        }
        if (negative) break;  // residuals only shrink as t grows
      }
      bool stranded = false;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(residual_[i]) > 0 && !open_[j + 1][i]) stranded = true;
      }
      if (stranded) {
        tick();
        continue;
      }
      x_[j] = t;
      descend(j + 1);
    }
    x_[j] = 0;
    residual_ = saved;
  }

  // The last coordinate is forced by any row that uses it.
  void finish_last() {
    const std::size_t j = n_ - 1;
    std::optional<Integer> forced;
    for (std::size_t i = 0; i < m_; ++i) {
      const Integer& aij = A_[i][j];
      if (sgn(aij) == 0) {
        if (sgn(residual_[i]) != 0) return;
        continue;
      }
      if (!mpz_divisible_p(residual_[i].get_mpz_t(), aij.get_mpz_t())) return;
      Integer q = residual_[i] / aij;
      if (sgn(q) < 0 || (forced && *forced != q)) return;
      forced = std::move(q);
    }
    if (forced) {
      if (*forced > upper_[j]) return;
      x_[j] = *forced;
      emit();
    } else {
      // Column is zero in every row and every residual is 0: any value works.
      for (Integer t = 0; t <= upper_[j]; ++t) {
        tick();
        x_[j] = t;
        emit();
      }
    }
    x_[j] = 0;
  }

  const Matrix& A_;
  std::size_t m_;
  std::size_t n_;
  std::size_t cap_;
  std::size_t node_cap_;
  std::size_t nodes_ = 0;
  Vector upper_;
  Vector residual_;
  Point x_;
  std::vector<std::vector<bool>> open_;
  PointSet out_;
};

}  // namespace

bool PointSet::contains(std::span<const Integer> p) const {
  const Point key(p.begin(), p.end());
  return std::binary_search(points.begin(), points.end(), key, lex_less);
}

bool VertexReport::is_vertex(std::size_t index) const {
  return std::binary_search(vertices.begin(), vertices.end(), index);
}

PointSet enumerate_feasible(const Matrix& A, std::span<const Integer> b, std::size_t cap,
                            const std::optional<Vector>& upper) {
  if (A.size() != b.size()) throw DimensionMismatch("enumerate_feasible: A and b disagree on m");
  const std::size_t n = A.empty() ? (upper ? upper->size() : 0) : A.front().size();
  for (const auto& row : A) {
    if (row.size() != n) throw DimensionMismatch("enumerate_feasible: ragged A");
  }
  if (upper && upper->size() != n) throw DimensionMismatch("enumerate_feasible: |upper| != n");

  IPInstance probe{A, Vector(b.begin(), b.end()), Vector(n, Integer(0)), Sense::Minimize};
  const BoxBounds box = box_bounds(probe);
  Vector U(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (upper) {
      U[j] = (*upper)[j];
      if (box.upper[j] && *box.upper[j] < U[j]) U[j] = *box.upper[j];
    } else if (box.upper[j]) {
      U[j] = *box.upper[j];
    } else {
      throw ValidationError("enumerate_feasible: column " + std::to_string(j) +
                            " is all zeros and has no explicit bound");
    }
  }
  for (const auto& bi : b) {
    if (sgn(bi) < 0) return PointSet{n, {}};
  }
  return Enumerator(A, b, cap, std::move(U)).run();
}

VertexReport vertex_set(const PointSet& S, std::size_t iteration_limit) {
  VertexReport report;
  std::vector<std::size_t> alive(S.size());
  for (std::size_t i = 0; i < S.size(); ++i) alive[i] = i;

  for (std::size_t idx = 0; idx < S.size(); ++idx) {
    std::vector<const Point*> cols;
    std::vector<std::size_t> origin;
    cols.reserve(alive.size());
    origin.reserve(alive.size());
    for (std::size_t k : alive) {
      if (k == idx) continue;
      cols.push_back(&S.points[k]);
      origin.push_back(k);
    }
    auto w = detail::convex_combination_of(S.points[idx], std::move(cols), iteration_limit);
    if (!w) {
      report.vertices.push_back(idx);
      continue;
    }
    for (auto& i : w->indices) i = origin[i];
    report.witnesses.emplace(idx, std::move(*w));
    alive.erase(std::find(alive.begin(), alive.end(), idx));
  }
  return report;
}

OracleOptimum brute_force_optimum(const IPInstance& inst, std::size_t cap) {
  validate(inst);
  const bool maximize = inst.sense == Sense::Maximize;
  const auto zeros = zero_columns(inst);

  std::optional<Vector> upper;
  bool improving_ray = false;
  if (!zeros.empty()) {
    const BoxBounds box = box_bounds(inst);
    upper = Vector(inst.cols());
    for (std::size_t j = 0; j < inst.cols(); ++j) (*upper)[j] = box.upper[j].value_or(Integer(0));
    for (std::size_t j : zeros) {
      if (maximize ? sgn(inst.c[j]) > 0 : sgn(inst.c[j]) < 0) improving_ray = true;
    }
  }

  const PointSet S = enumerate_feasible(inst.A, inst.b, cap, upper);
  OracleOptimum opt;
  if (S.points.empty()) {
    opt.status = OptimumStatus::Infeasible;
    return opt;
  }
  if (improving_ray) {
    opt.status = OptimumStatus::Unbounded;
    return opt;
  }
  opt.status = OptimumStatus::Optimal;
  bool first = true;
  for (const auto& x : S.points) {
    Integer v = dot(inst.c, x);
    const bool better = first || (maximize ? v > opt.value : v < opt.value);
    if (better) {
      opt.value = v;
      opt.argopt.clear();
      first = false;
    }
    if (v == opt.value) opt.argopt.push_back(x);
  }
  return opt;
}

CheckResult check_rhs_is_vertex(std::span<const Integer> b, std::size_t cap) {
  CheckResult res;
  const Vector f = aggregation_vector(b);
  const Integer rhs = dot(f, b);
  const PointSet S = enumerate_feasible(Matrix{f}, std::span<const Integer>(&rhs, 1), cap);

  const Point target(b.begin(), b.end());
  std::optional<Integer> best;
  std::vector<std::size_t> minimizers;
  for (std::size_t i = 0; i < S.size(); ++i) {
    Integer sum = 0;
    for (const auto& t : S.points[i]) sum += t;
    if (!best || sum < *best) {
      best = sum;
      minimizers.clear();
    }
    if (sum == *best) minimizers.push_back(i);
  }
  if (minimizers.size() != 1 || S.points[minimizers.front()] != target) {
    res.holds = false;
    for (std::size_t i : minimizers) {
      if (S.points[i] != target) {
        res.counterexample = S.points[i];
        break;
      }
    }
    res.detail = "coordinate sum is not uniquely minimized at b = " + format_point(b);
    return res;
  }

  std::vector<const Point*> others;
  for (const auto& p : S.points) {
    if (p != target) others.push_back(&p);
  }
  if (auto w = detail::convex_combination_of(target, std::move(others), kDefaultIterationLimit)) {
    res.holds = false;
    res.counterexample = target;
    res.detail = "b = " + format_point(b) + " is a convex combination of other solutions";
  }
  return res;
}

namespace {

void require_no_zero_columns(const IPInstance& inst, std::string_view who) {
  if (!zero_columns(inst).empty()) {
    throw ValidationError(std::string(who) + ": instance has all-zero columns; drop them first");
  }
}

// Holds when every vertex of conv(S) is also a vertex of conv(aggregated);
// the first vertex that is not becomes the counterexample.
CheckResult preservation_against(const PointSet& S, const VertexReport& V,
                                 const PointSet& aggregated) {
  CheckResult res;
  for (std::size_t vi : V.vertices) {
    const Point& x = S.points[vi];
    if (!aggregated.contains(x)) {
      res.holds = false;
      res.counterexample = x;
      res.detail = "vertex " + format_point(x) + " is missing from the aggregated set";
      return res;
    }
    std::vector<const Point*> others;
    for (const auto& p : aggregated.points) {
      if (p != x) others.push_back(&p);
    }
    if (detail::convex_combination_of(x, std::move(others), kDefaultIterationLimit)) {
      res.holds = false;
      res.counterexample = x;
      res.detail = "vertex " + format_point(x) + " is not a vertex of the aggregated hull";
      return res;
    }
  }
  return res;
}

CheckResult rhs_bound_against(const PointSet& S, const VertexReport& V, const Integer& a0) {
  CheckResult res;
  for (std::size_t vi : V.vertices) {
    const Integer bound = vertex_lower_bound(S.points[vi]);
    if (a0 < bound) {
      res.holds = false;
      res.counterexample = S.points[vi];
      res.detail = "a0 = " + to_decimal(a0) + " < " + to_decimal(bound) + " required by vertex " +
                   format_point(S.points[vi]);
      return res;
    }
  }
  return res;
}

}  // namespace

CheckResult check_vertex_preservation(const IPInstance& inst, std::size_t cap) {
  validate(inst);
  require_no_zero_columns(inst, "check_vertex_preservation");
  const PointSet S = enumerate_feasible(inst.A, inst.b, cap);
  if (S.points.empty()) return CheckResult{true, true, std::nullopt, "feasible set is empty"};
  const VertexReport V = vertex_set(S);
  const AggregatedRow row = aggregate(inst.A, inst.b);
  const PointSet T = enumerate_feasible(Matrix{row.a}, std::span<const Integer>(&row.a0, 1), cap);
  return preservation_against(S, V, T);
}

CheckResult check_vertex_rhs_bound(const IPInstance& inst, std::size_t cap) {
  validate(inst);
  require_no_zero_columns(inst, "check_vertex_rhs_bound");
  const PointSet S = enumerate_feasible(inst.A, inst.b, cap);
  if (S.points.empty()) return CheckResult{true, true, std::nullopt, "feasible set is empty"};
  const VertexReport V = vertex_set(S);
  return rhs_bound_against(S, V, aggregate(inst.A, inst.b).a0);
}

bool check_box_injectivity(std::span<const Integer> a, std::span<const Integer> x0,
                           std::size_t cap) {
  if (a.size() != x0.size()) throw DimensionMismatch("check_box_injectivity: |a| != |x0|");
  Integer cells = 1;
  for (const auto& xi : x0) {
    if (sgn(xi) < 0) throw ValidationError("check_box_injectivity: negative coordinate");
    cells *= xi + 1;
  }
  if (cells > static_cast<unsigned long>(cap)) {
    throw CapExceeded("box has " + to_decimal(cells) + " points, cap is " + std::to_string(cap));
  }

  // Odometer over the box, tracking a^T t incrementally.
  std::vector<Integer> values;
  values.reserve(cells.get_ui());
  Point t(x0.size(), Integer(0));
  Integer value = 0;
  while (true) {
    values.push_back(value);
    std::size_t i = 0;
    for (; i < t.size(); ++i) {
      if (t[i] < x0[i]) {
        t[i] += 1;
        value += a[i];
        break;
      }
      value -= a[i] * t[i];
      t[i] = 0;
    }
    if (i == t.size()) break;
  }
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

Audit audit_instance(const IPInstance& inst, std::size_t cap) {
  validate(inst);
  require_no_zero_columns(inst, "audit_instance");
  Audit audit;
  audit.feasible = enumerate_feasible(inst.A, inst.b, cap);
  audit.vertices = vertex_set(audit.feasible);
  audit.f = aggregation_vector(inst.b);
  AggregatedRow row = aggregate(inst.A, inst.b);
  audit.a = std::move(row.a);
  audit.a0 = std::move(row.a0);
  audit.aggregated =
      enumerate_feasible(Matrix{audit.a}, std::span<const Integer>(&audit.a0, 1), cap);
  audit.aggregated_vertices = vertex_set(audit.aggregated);

  if (audit.feasible.points.empty()) {
    audit.vertex_preservation = {true, true, std::nullopt, "feasible set is empty"};
    audit.vertex_rhs_bound = {true, true, std::nullopt, "feasible set is empty"};
  } else {
    CheckResult& pres = audit.vertex_preservation;
    for (std::size_t vi : audit.vertices.vertices) {
      const Point& x = audit.feasible.points[vi];
      const auto& pts = audit.aggregated.points;
      const auto it = std::lower_bound(pts.begin(), pts.end(), x, lex_less);
      const bool found = it != pts.end() && *it == x;
      if (!found || !audit.aggregated_vertices.is_vertex(static_cast<std::size_t>(it - pts.begin()))) {
        pres.holds = false;
        pres.counterexample = x;
        pres.detail = "vertex " + format_point(x) +
                      (found ? " is not a vertex of the aggregated hull"
                             : " is missing from the aggregated set");
        break;
      }
    }
    audit.vertex_rhs_bound = rhs_bound_against(audit.feasible, audit.vertices, audit.a0);
  }

  for (std::size_t vi : audit.aggregated_vertices.vertices) {
    const Point& x = audit.aggregated.points[vi];
    if (!check_box_injectivity(audit.a, x, cap)) {
      audit.box_injectivity.holds = false;
      audit.box_injectivity.counterexample = x;
      audit.box_injectivity.detail =
          "t -> a^T t is not injective on the box below aggregated vertex " + format_point(x);
      break;
    }
  }
  return audit;
}

}  // namespace knapred::oracle
