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

#if defined(KNAPRED_HAVE_AVX2_KERNEL)

#include <immintrin.h>

#include <algorithm>
#include <vector>

// Compiled without -mavx2; every function touching AVX2 carries the target
// attribute so that no inline code from shared headers gets AVX2 encodings.
#define KNAPRED_AVX2 __attribute__((target("avx2")))

namespace knapred::simd::detail {

namespace {

KNAPRED_AVX2 inline __m256i min_epi64(__m256i a, __m256i b) {
  return _mm256_blendv_epi8(a, b, _mm256_cmpgt_epi64(a, b));
}

KNAPRED_AVX2 inline std::int64_t hmin_epi64(__m256i v) {
  alignas(32) std::int64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return std::min(std::min(lanes[0], lanes[1]), std::min(lanes[2], lanes[3]));
}

// Padded scalar step; guard cells make the w > v case read kUnreachable.
inline void relax_one(std::int64_t* origin, std::int64_t v, std::span<const std::int64_t> weights,
                      std::span<const std::int64_t> costs) {
  std::int64_t best = kUnreachable;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    best = std::min(best, origin[v - weights[j]] + costs[j]);
  }
  origin[v] = best;
}

// Every weight >= 4: lanes v..v+3 only read cells below v, which are final.
KNAPRED_AVX2 void fill_blocked(std::int64_t* origin, std::int64_t rhs,
                               std::span<const std::int64_t> weights,
                               std::span<const std::int64_t> costs) {
  const __m256i none = _mm256_set1_epi64x(kUnreachable);
  std::int64_t v = 1;
  for (; v + 3 <= rhs; v += 4) {
    __m256i acc = none;
    for (std::size_t j = 0; j < weights.size(); ++j) {
      const __m256i prev =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(origin + v - weights[j]));
      acc = min_epi64(acc, _mm256_add_epi64(prev, _mm256_set1_epi64x(costs[j])));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(origin + v), acc);
  }
  for (; v <= rhs; ++v) relax_one(origin, v, weights, costs);
}

// Short weights: vectorize across items with a gather per cell.
KNAPRED_AVX2 void fill_gathered(std::int64_t* origin, std::int64_t rhs,
                                std::span<const std::int64_t> weights,
                                std::span<const std::int64_t> costs) {
  const std::size_t groups = (weights.size() + 3) / 4;
  // Filler items (w = 1, c = kUnreachable) never beat the accumulator.
  std::vector<std::int64_t> w(groups * 4, 1);
  std::vector<std::int64_t> c(groups * 4, kUnreachable);
  std::copy(weights.begin(), weights.end(), w.begin());
  std::copy(costs.begin(), costs.end(), c.begin());

  const __m256i none = _mm256_set1_epi64x(kUnreachable);
  const auto* base = reinterpret_cast<const long long*>(origin);
  for (std::int64_t v = 1; v <= rhs; ++v) {
    const __m256i vv = _mm256_set1_epi64x(v);
    __m256i acc = none;
    for (std::size_t g = 0; g < groups; ++g) {
      const __m256i wv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w.data() + 4 * g));
      const __m256i cv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c.data() + 4 * g));
      const __m256i prev = _mm256_i64gather_epi64(base, _mm256_sub_epi64(vv, wv), 8);
      acc = min_epi64(acc, _mm256_add_epi64(prev, cv));
    }
    origin[v] = hmin_epi64(acc);
  }
}

}  // namespace

void fill_avx2(std::int64_t* origin, std::int64_t rhs, std::span<const std::int64_t> weights,
               std::span<const std::int64_t> costs) {
  if (weights.empty()) {
    std::fill(origin + 1, origin + rhs + 1, kUnreachable);
    return;
  }
  const std::int64_t lightest = *std::min_element(weights.begin(), weights.end());
  if (lightest >= 4) {
    fill_blocked(origin, rhs, weights, costs);
  } else {
    fill_gathered(origin, rhs, weights, costs);
  }
}

}  // namespace knapred::simd::detail

#endif  // KNAPRED_HAVE_AVX2_KERNEL
