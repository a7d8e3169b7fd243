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

// Test-only helpers: literal builders and naive oracles that share no code
// with the library paths they check.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <vector>

#include "knapred/bigint.hpp"
#include "knapred/instance.hpp"

namespace knapred::testing {

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix m;
  for (const auto& r : rows) m.push_back(vec(r));
  return m;
}

inline IPInstance make(Matrix A, Vector b, Vector c, Sense s = Sense::Minimize) {
  return IPInstance{std::move(A), std::move(b), std::move(c), s};
}

using SmallPoint = std::vector<long>;

inline Point to_point(const SmallPoint& p) {
  Point out;
  for (long x : p) out.emplace_back(x);
  return out;
}

/// Every x in [0, box]^n with A x = b, by scanning the full grid.
inline std::vector<SmallPoint> grid_filter(const std::vector<std::vector<long>>& A,
                                           const std::vector<long>& b, long box, std::size_t n) {
  std::vector<SmallPoint> out;
  SmallPoint x(n, 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < A.size() && ok; ++i) {
      long s = 0;
      for (std::size_t j = 0; j < n; ++j) s += A[i][j] * x[j];
      ok = s == b[i];
    }
    if (ok) out.push_back(x);
    std::size_t k = n;
    while (k-- > 0) {
      if (x[k] < box) {
        ++x[k];
        break;
      }
      x[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

struct EnumeratedKnapsack {
  bool feasible = false;
  long value = 0;
};

/// min cost^T x over a^T x = a0 by enumerating every x with x_j <= a0 / a_j.
inline EnumeratedKnapsack enumerate_knapsack(const std::vector<long>& a, long a0,
                                             const std::vector<long>& cost) {
  EnumeratedKnapsack best;
  std::vector<long> x(a.size(), 0);
  auto rec = [&](auto&& self, std::size_t j, long rest, long acc) -> void {
    if (j == a.size()) {
      if (rest == 0 && (!best.feasible || acc < best.value)) {
        best.feasible = true;
        best.value = acc;
      }
      return;
    }
    for (long t = 0; t * a[j] <= rest; ++t) self(self, j + 1, rest - t * a[j], acc + t * cost[j]);
  };
  rec(rec, 0, a0, 0);
  return best;
}

/// Random instance from the acceptance population.
inline IPInstance random_instance(std::mt19937_64& rng) {
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  const std::size_t m = static_cast<std::size_t>(pick(1, 3));
  const std::size_t n = static_cast<std::size_t>(pick(1, 4));
  IPInstance inst;
  inst.A.assign(m, Vector(n));
  for (auto& row : inst.A) {
    for (auto& e : row) e = pick(0, 3);
  }
  inst.b.resize(m);
  for (auto& e : inst.b) e = pick(0, 4);
  inst.c.resize(n);
  for (auto& e : inst.c) e = pick(-5, 5);
  return inst;
}

}  // namespace knapred::testing
