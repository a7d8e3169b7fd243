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

#include "knapred/dp_kernels.hpp"

#if defined(KNAPRED_HAVE_NEON_KERNEL)

#include <arm_neon.h>

#include <algorithm>

namespace knapred::simd::detail {

namespace {

inline int64x2_t min_s64(int64x2_t a, int64x2_t b) { return vbslq_s64(vcgtq_s64(a, b), b, a); }

}  // namespace

// Two lanes per step; needs every weight >= 2 so lane v+1 never reads v.
void fill_neon(std::int64_t* origin, std::int64_t rhs, std::span<const std::int64_t> weights,
               std::span<const std::int64_t> costs) {
  const bool blocked =
      !weights.empty() && *std::min_element(weights.begin(), weights.end()) >= 2;
  if (!blocked) {
    fill_scalar(origin, rhs, weights, costs);
    return;
  }
  const int64x2_t none = vdupq_n_s64(kUnreachable);
  std::int64_t v = 1;
  for (; v + 1 <= rhs; v += 2) {
    int64x2_t acc = none;
    for (std::size_t j = 0; j < weights.size(); ++j) {
      const int64x2_t prev = vld1q_s64(origin + v - weights[j]);
      acc = min_s64(acc, vaddq_s64(prev, vdupq_n_s64(costs[j])));
    }
    vst1q_s64(origin + v, acc);
  }
  for (; v <= rhs; ++v) {
    std::int64_t best = kUnreachable;
    for (std::size_t j = 0; j < weights.size(); ++j) {
      best = std::min(best, origin[v - weights[j]] + costs[j]);
    }
    origin[v] = best;
  }
}

}  // namespace knapred::simd::detail

#endif  // KNAPRED_HAVE_NEON_KERNEL
