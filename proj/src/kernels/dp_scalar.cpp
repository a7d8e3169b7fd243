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

namespace knapred::simd::detail {

void fill_scalar(std::int64_t* origin, std::int64_t rhs, std::span<const std::int64_t> weights,
                 std::span<const std::int64_t> costs) {
  for (std::int64_t v = 1; v <= rhs; ++v) {
    std::int64_t best = kUnreachable;
    for (std::size_t j = 0; j < weights.size(); ++j) {
      const std::int64_t w = weights[j];
      if (w > v) continue;
      const std::int64_t prev = origin[v - w];
      if (prev >= kUnreachable) continue;
      const std::int64_t cand = prev + costs[j];
      if (cand < best) best = cand;
    }
    origin[v] = best;
  }
}

}  // namespace knapred::simd::detail
