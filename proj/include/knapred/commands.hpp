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

// The CLI subcommands as library calls. Each returns the JSON report that
// goes to stdout, a one-line human summary for stderr, and the exit code.
// Reports carry integers as decimal strings and keep a fixed key order, so
// the same input and flags always produce the same bytes.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "knapred/bigint.hpp"
#include "knapred/hull_oracle.hpp"
#include "knapred/knapsack.hpp"

namespace knapred::cli {

using Report = nlohmann::ordered_json;

enum ExitCode : int {
  kExitOk = 0,
  kExitInfeasible = 1,
  kExitUnbounded = 2,
  kExitBudget = 3,  // solver budget or oracle cap
  kExitInput = 4,
  kExitFalsified = 5,
};

struct CommandOutput {
  Report report;
  std::string summary;
  int exit_code = kExitOk;
};

struct AggregateOptions {
  std::optional<std::vector<std::size_t>> row_perm;
};

struct SolveOptions {
  SolverBudget budget;
  KnapsackOptions knapsack;
  std::optional<std::vector<std::size_t>> row_perm;
  bool timings = false;
};

struct VerifyOptions {
  std::size_t cap = oracle::kDefaultCap;
  SolverBudget budget;
  bool timings = false;
};

struct BoundOptions {
  std::vector<Integer> vertex;
  std::size_t cap = oracle::kDefaultCap;
};

struct OracleOptions {
  std::size_t cap = oracle::kDefaultCap;
};

// `source` is echoed into the report as given (usually the file path).
CommandOutput run_aggregate(std::string_view source, std::string_view text,
                            const AggregateOptions& opts = {});
CommandOutput run_solve(std::string_view source, std::string_view text,
                        const SolveOptions& opts = {});
CommandOutput run_verify(std::string_view source, std::string_view text,
                         const VerifyOptions& opts = {});
CommandOutput run_bound(std::string_view source, std::string_view text, const BoundOptions& opts);
CommandOutput run_oracle(std::string_view source, std::string_view text,
                         const OracleOptions& opts = {});

/// Report for input that never reached a command (unreadable file, bad flags).
CommandOutput input_error(std::string_view command, std::string_view source,
                          std::string_view message);

/// Comma-separated integers, e.g. "1,0,1". Throws ValidationError.
std::vector<Integer> parse_integer_csv(std::string_view text);
std::vector<std::size_t> parse_index_csv(std::string_view text);

/// FNV-1a 64 of the canonical instance encoding, as "fnv1a64:<16 hex>".
std::string instance_digest(const IPInstance& inst);

/// Stable serialization used for stdout: two-space indent, trailing newline.
std::string render(const Report& report);

}  // namespace knapred::cli
