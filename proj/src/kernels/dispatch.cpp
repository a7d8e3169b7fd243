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

#include <algorithm>
#include <string>

#include "knapred/dp_kernels.hpp"
#include "knapred/errors.hpp"

namespace knapred::simd {

CostTable::CostTable(std::int64_t rhs, std::int64_t pad)
    : buf_(static_cast<std::size_t>(pad + rhs + 1), kUnreachable), pad_(pad), rhs_(rhs) {
  buf_[static_cast<std::size_t>(pad_)] = 0;
}

bool kernel_available(DpKernel kernel) {
  switch (kernel) {
    case DpKernel::Auto:
    case DpKernel::Scalar:
      return true;
    case DpKernel::Avx2:
#if defined(KNAPRED_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case DpKernel::Neon:
#if defined(KNAPRED_HAVE_NEON_KERNEL)
      return true;
#else
      return false;
#endif
  }
  return false;
}

DpKernel resolve_kernel(DpKernel requested) {
  if (requested != DpKernel::Auto) {
    if (!kernel_available(requested)) {
      throw ValidationError("DP kernel '" + std::string(kernel_name(requested)) +
                            "' is not available on this CPU");
    }
    return requested;
  }
  if (kernel_available(DpKernel::Avx2)) return DpKernel::Avx2;
  if (kernel_available(DpKernel::Neon)) return DpKernel::Neon;
  return DpKernel::Scalar;
}

std::string_view kernel_name(DpKernel kernel) {
  switch (kernel) {
    case DpKernel::Auto: return "auto";
    case DpKernel::Scalar: return "scalar";
    case DpKernel::Avx2: return "avx2";
    case DpKernel::Neon: return "neon";
  }
  return "unknown";
}

DpKernel parse_kernel(std::string_view name) {
  for (auto k : {DpKernel::Auto, DpKernel::Scalar, DpKernel::Avx2, DpKernel::Neon}) {
    if (kernel_name(k) == name) return k;
  }
  throw ValidationError("unknown DP kernel '" + std::string(name) + "'");
}

CostTable min_cost_table(DpKernel kernel, std::span<const std::int64_t> weights,
                         std::span<const std::int64_t> costs, std::int64_t rhs) {
  if (weights.size() != costs.size()) throw DimensionMismatch("min_cost_table: weights/costs");
  if (rhs < 0) throw ValidationError("min_cost_table: negative rhs");
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (weights[j] < 1 || weights[j] > rhs) {
      throw ValidationError("min_cost_table: weight out of range [1, rhs]");
    }
    if (costs[j] < 0 || costs[j] >= kUnreachable) {
      throw ValidationError("min_cost_table: cost out of machine range");
    }
  }
  if (rhs > 0 && !costs.empty() &&
      *std::max_element(costs.begin(), costs.end()) > (kUnreachable - 1) / rhs) {
    throw ValidationError("min_cost_table: rhs * max cost does not fit the machine table");
  }
  const std::int64_t pad =
      weights.empty() ? 1 : *std::max_element(weights.begin(), weights.end());
  CostTable table(rhs, pad);
  switch (resolve_kernel(kernel)) {
#if defined(KNAPRED_HAVE_AVX2_KERNEL)
    case DpKernel::Avx2:
      detail::fill_avx2(table.origin(), rhs, weights, costs);
      break;
#endif
#if defined(KNAPRED_HAVE_NEON_KERNEL)
    case DpKernel::Neon:
      detail::fill_neon(table.origin(), rhs, weights, costs);
      break;
#endif
    default:
      detail::fill_scalar(table.origin(), rhs, weights, costs);
      break;
  }
  return table;
}

}  // namespace knapred::simd
