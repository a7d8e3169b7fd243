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

// Exact membership test x0 in conv(points) via phase-1 revised simplex.
//
//   find lambda >= 0 :  sum_i lambda_i y_i = x0,  sum_i lambda_i = 1
//
// One artificial per row starts as the basis. Pricing uses the smallest
// eligible index and the ratio test breaks ties by the smallest basic
// index (Bland), so the method terminates without perturbation.

#include <algorithm>
#include <limits>

#include "knapred/errors.hpp"
#include "knapred/hull_oracle.hpp"
#include "oracle_internal.hpp"

namespace knapred::oracle {

namespace {

// Products of two such values, summed over a few thousand rows, fit __int128.
constexpr std::int64_t kSmall = std::int64_t{1} << 55;

bool small(const Integer& v) { return v < kSmall && v > -kSmall; }

class Phase1 {
 public:
  Phase1(std::span<const Integer> x0, std::vector<const Point*> cols)
      : dim_(x0.size()), rows_(x0.size() + 1), cols_(std::move(cols)) {
    flip_.assign(dim_, false);
    rhs_.resize(rows_);
    for (std::size_t r = 0; r < dim_; ++r) {
      flip_[r] = sgn(x0[r]) < 0;
      rhs_[r] = flip_[r] ? Rational(-x0[r]) : Rational(x0[r]);
    }
    rhs_[dim_] = 1;

    machine_ = std::all_of(cols_.begin(), cols_.end(), [](const Point* p) {
      return std::all_of(p->begin(), p->end(), small);
    });
    if (machine_) {
      packed_.reserve(cols_.size() * dim_);
      for (const Point* p : cols_) {
        for (std::size_t r = 0; r < dim_; ++r) {
          const std::int64_t v = to_int64((*p)[r]);
          packed_.push_back(flip_[r] ? -v : v);
        }
      }
    }
  }

  std::optional<ConvexWitness> run(std::size_t iteration_limit) {
    const std::size_t n = cols_.size();
    if (n == 0) return std::nullopt;

    binv_.assign(rows_, std::vector<Rational>(rows_, Rational(0)));
    for (std::size_t r = 0; r < rows_; ++r) binv_[r][r] = 1;
    xb_ = rhs_;
    basis_.resize(rows_);
    in_basis_.assign(n + rows_, false);
    for (std::size_t r = 0; r < rows_; ++r) {
      basis_[r] = n + r;
      in_basis_[n + r] = true;
    }

    for (std::size_t iter = 0;; ++iter) {
      if (artificial_sum() == 0) return witness();
      if (iter >= iteration_limit) {
        throw IterationLimit("phase-1 simplex exceeded " + std::to_string(iteration_limit) +
                             " iterations");
      }
      const auto entering = price();
      if (!entering) return std::nullopt;  // optimum of phase 1 is positive
      pivot(*entering);
    }
  }

 private:
  bool artificial(std::size_t var) const { return var >= cols_.size(); }

  Rational artificial_sum() const {
    Rational s = 0;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (artificial(basis_[r])) s += xb_[r];
    }
    return s;
  }

  Integer column_entry(std::size_t j, std::size_t r) const {
    if (r == dim_) return 1;
    const Integer& v = (*cols_[j])[r];
    return flip_[r] ? Integer(-v) : v;
  }

  // Smallest variable index with negative reduced cost. With pi the
  // simplex multipliers scaled to integers by D, a structural column is
  // eligible iff pi . A_j > 0 and artificial r iff pi_r > D.
  std::optional<std::size_t> price() const {
    std::vector<Rational> pi(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!artificial(basis_[r])) continue;
      for (std::size_t c = 0; c < rows_; ++c) pi[c] += binv_[r][c];
    }
    Integer scale = 1;
    for (const auto& p : pi) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), p.get_den_mpz_t());
    std::vector<Integer> pint(rows_);
    for (std::size_t c = 0; c < rows_; ++c) pint[c] = pi[c].get_num() * (scale / pi[c].get_den());

    const std::size_t n = cols_.size();
    const bool fast = machine_ && std::all_of(pint.begin(), pint.end(), small);
    if (fast) {
      std::vector<std::int64_t> p64(rows_);
      for (std::size_t c = 0; c < rows_; ++c) p64[c] = to_int64(pint[c]);
      for (std::size_t j = 0; j < n; ++j) {
        if (in_basis_[j]) continue;
        __int128 acc = p64[dim_];
        const std::int64_t* col = packed_.data() + j * dim_;
        for (std::size_t r = 0; r < dim_; ++r) acc += static_cast<__int128>(p64[r]) * col[r];
        if (acc > 0) return j;
      }
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        if (in_basis_[j]) continue;
        Integer acc = pint[dim_];
        for (std::size_t r = 0; r < dim_; ++r) acc += pint[r] * column_entry(j, r);
        if (sgn(acc) > 0) return j;
      }
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!in_basis_[n + r] && pint[r] > scale) return n + r;
    }
    return std::nullopt;
  }

  void pivot(std::size_t entering) {
    std::vector<Rational> u(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r) {
      if (artificial(entering)) {
        u[r] = binv_[r][entering - cols_.size()];
      } else {
        for (std::size_t c = 0; c < rows_; ++c) {
          if (sgn(binv_[r][c]) != 0) u[r] += binv_[r][c] * column_entry(entering, c);
        }
      }
    }

    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (sgn(u[r]) <= 0) continue;
      Rational ratio = xb_[r] / u[r];
      if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
        leave = r;
        best = std::move(ratio);
      }
    }
    if (!leave) throw Error("phase-1 simplex: unbounded ray (cannot happen)");

    const std::size_t p = *leave;
    const Rational up = u[p];
    for (auto& v : binv_[p]) v /= up;
    xb_[p] /= up;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == p || sgn(u[r]) == 0) continue;
      for (std::size_t c = 0; c < rows_; ++c) binv_[r][c] -= u[r] * binv_[p][c];
      xb_[r] -= u[r] * xb_[p];
    }
    in_basis_[basis_[p]] = false;
    basis_[p] = entering;
    in_basis_[entering] = true;
  }

  ConvexWitness witness() const {
    std::vector<std::pair<std::size_t, Rational>> terms;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!artificial(basis_[r]) && sgn(xb_[r]) > 0) terms.emplace_back(basis_[r], xb_[r]);
    }
    std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    ConvexWitness w;
    for (auto& [j, lambda] : terms) {
      w.indices.push_back(j);
      w.weights.push_back(lambda);
    }
    return w;
  }

  std::size_t dim_;
  std::size_t rows_;
  std::vector<const Point*> cols_;
  std::vector<bool> flip_;
  std::vector<Rational> rhs_;
  bool machine_ = false;
  std::vector<std::int64_t> packed_;

  std::vector<std::vector<Rational>> binv_;
  std::vector<Rational> xb_;
  std::vector<std::size_t> basis_;
  std::vector<bool> in_basis_;
};

}  // namespace

namespace detail {

std::optional<ConvexWitness> convex_combination_of(std::span<const Integer> x0,
                                                   std::vector<const Point*> cols,
                                                   std::size_t iteration_limit) {
  for (const Point* p : cols) {
    if (p->size() != x0.size()) throw DimensionMismatch("convex combination: dimension mismatch");
  }
  return Phase1(x0, std::move(cols)).run(iteration_limit);
}

}  // namespace detail

std::optional<ConvexWitness> check_convex_combination(std::span<const Integer> x0,
                                                      std::span<const Point> others,
                                                      std::size_t iteration_limit) {
  std::vector<const Point*> cols;
  cols.reserve(others.size());
  for (const auto& p : others) cols.push_back(&p);
  return detail::convex_combination_of(x0, std::move(cols), iteration_limit);
}

bool verify_witness(std::span<const Integer> x0, std::span<const Point> points,
                    const ConvexWitness& witness) {
  if (witness.indices.size() != witness.weights.size() || witness.indices.empty()) return false;
  Rational total = 0;
  std::vector<Rational> combo(x0.size(), Rational(0));
  for (std::size_t i = 0; i < witness.indices.size(); ++i) {
    const auto& lambda = witness.weights[i];
    if (sgn(lambda) < 0) return false;
    if (witness.indices[i] >= points.size()) return false;
    const Point& y = points[witness.indices[i]];
    if (y.size() != x0.size()) return false;
    total += lambda;
    for (std::size_t r = 0; r < x0.size(); ++r) combo[r] += lambda * y[r];
  }
  if (total != 1) return false;
  for (std::size_t r = 0; r < x0.size(); ++r) {
    if (combo[r] != Rational(x0[r])) return false;
  }
  return true;
}

}  // namespace knapred::oracle
