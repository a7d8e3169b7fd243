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

#include <optional>
#include <span>
#include <vector>

#include "knapred/hull_oracle.hpp"

namespace knapred::oracle::detail {

/// check_convex_combination over borrowed columns; witness indices refer to
/// positions in `cols`.
std::optional<ConvexWitness> convex_combination_of(std::span<const Integer> x0,
                                                   std::vector<const Point*> cols,
                                                   std::size_t iteration_limit);

}  // namespace knapred::oracle::detail
