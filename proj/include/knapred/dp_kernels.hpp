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

// Machine-word kernels for the equality knapsack table
//
//   g[0] = 0,   g[v] = min_j { g[v - w_j] + c_j : w_j <= v }.
//
// The scalar kernel is the reference; vector kernels must produce a
// bit-identical table. Callers guarantee that every reachable value stays
// below kUnreachable (rhs * max(c) < kUnreachable), so kUnreachable is never
// confused with a real cost and sums with it never overflow.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace knapred::simd {

enum class DpKernel { Auto, Scalar, Avx2, Neon };

inline constexpr std::int64_t kUnreachable = std::int64_t{1} << 61;

/// Table over v = 0..rhs with `pad` guard cells before index 0 that read as
/// unreachable. Kernels may read g[v - w] for any v >= 1 and w <= pad.
class CostTable {
 public:
  CostTable(std::int64_t rhs, std::int64_t pad);

  std::int64_t rhs() const { return rhs_; }
  std::int64_t operator[](std::int64_t v) const { return buf_[static_cast<std::size_t>(pad_ + v)]; }
  bool reachable(std::int64_t v) const { return (*this)[v] < kUnreachable; }

  std::int64_t* origin() { return buf_.data() + pad_; }

 private:
  std::vector<std::int64_t> buf_;
  std::int64_t pad_;
  std::int64_t rhs_;
};

/// Weights must satisfy 1 <= w_j <= rhs; costs 0 <= c_j < kUnreachable.
CostTable min_cost_table(DpKernel kernel, std::span<const std::int64_t> weights,
                         std::span<const std::int64_t> costs, std::int64_t rhs);

/// Resolves Auto to the best kernel this CPU supports.
DpKernel resolve_kernel(DpKernel requested);
bool kernel_available(DpKernel kernel);
std::string_view kernel_name(DpKernel kernel);
DpKernel parse_kernel(std::string_view name);

namespace detail {

// Each fills origin[1..rhs]; origin[0] is 0 and the guard cells hold
// kUnreachable on entry.
void fill_scalar(std::int64_t* origin, std::int64_t rhs, std::span<const std::int64_t> weights,
                 std::span<const std::int64_t> costs);
#if defined(KNAPRED_HAVE_AVX2_KERNEL)
void fill_avx2(std::int64_t* origin, std::int64_t rhs, std::span<const std::int64_t> weights,
               std::span<const std::int64_t> costs);
#endif
#if defined(KNAPRED_HAVE_NEON_KERNEL)
void fill_neon(std::int64_t* origin, std::int64_t rhs, std::span<const std::int64_t> weights,
               std::span<const std::int64_t> costs);
#endif

}  // namespace detail

}  // namespace knapred::simd
