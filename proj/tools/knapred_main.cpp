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

// knapred: reduce an equality-form integer program to one knapsack row,
// solve it, and audit the reduction against exact brute force.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "knapred/commands.hpp"
#include "knapred/errors.hpp"

namespace {

using namespace knapred;

std::optional<std::string> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const cli::CommandOutput& out) {
  std::cout << cli::render(out.report);
  std::cerr << out.summary << "\n";
  return out.exit_code;
}

Integer positive(const std::string& flag, const std::string& text) {
  auto v = parse_decimal(text);
  if (!v || sgn(*v) <= 0) throw ValidationError(flag + " expects a positive integer");
  return *v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Aggregate equality integer programs into a single knapsack constraint"};
  app.require_subcommand(1);

  std::string file;
  std::string row_perm;
  std::string budget_rhs = "10000000";
  std::string budget_cells = "1000000000";
  std::string kernel = "auto";
  std::string vertex;
  std::size_t cap = oracle::kDefaultCap;
  bool timings = false;
  bool exact_only = false;

  auto* agg = app.add_subcommand("aggregate", "Print f, f^T A, f^T b and the growth of f^T b");
  agg->add_option("file", file, "Instance JSON")->required();
  agg->add_option("--row-perm", row_perm, "Aggregate rows in this order (CSV of row indices)");

  auto* solve = app.add_subcommand("solve", "Solve through the knapsack reduction");
  solve->add_option("file", file, "Instance JSON")->required();
  solve->add_option("--budget-rhs", budget_rhs, "Largest admissible a0");
  solve->add_option("--budget-cells", budget_cells, "Largest admissible n' * a0");
  solve->add_option("--row-perm", row_perm, "Aggregate rows in this order (CSV of row indices)");
  solve->add_option("--kernel", kernel, "DP kernel: auto, scalar, avx2, neon");
  solve->add_flag("--exact-only", exact_only, "Always use the arbitrary-precision table");
  solve->add_flag("--timings", timings, "Include wall-clock timings in the report");

  auto* verify = app.add_subcommand("verify", "Check the reduction against exact brute force");
  verify->add_option("file", file, "Instance JSON")->required();
  verify->add_option("--cap", cap, "Oracle enumeration cap (points)");
  verify->add_option("--budget-rhs", budget_rhs, "Largest admissible a0 for the pipeline");
  verify->add_option("--budget-cells", budget_cells, "Largest admissible n' * a0");
  verify->add_flag("--timings", timings, "Include wall-clock timings in the report");

  auto* bound = app.add_subcommand("bound", "Vertex lower bound prod(v_i + 1) - 1 versus a0");
  bound->add_option("file", file, "Instance JSON")->required();
  bound->add_option("--vertex", vertex, "Feasible vertex as CSV, e.g. 1,0,1")->required();
  bound->add_option("--cap", cap, "Oracle enumeration cap for vertex certification");

  auto* orc = app.add_subcommand("oracle", "Dump enumerated feasible sets and vertex reports");
  orc->add_option("file", file, "Instance JSON")->required();
  orc->add_option("--cap", cap, "Oracle enumeration cap (points)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitInput;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  const auto text = slurp(file);
  if (!text) return emit(cli::input_error(name, file, "cannot read file '" + file + "'"));

  try {
    if (cmd == agg) {
      cli::AggregateOptions o;
      if (!row_perm.empty()) o.row_perm = cli::parse_index_csv(row_perm);
      return emit(cli::run_aggregate(file, *text, o));
    }
    if (cmd == solve) {
      cli::SolveOptions o;
      o.budget.max_rhs = positive("--budget-rhs", budget_rhs);
      o.budget.max_cells = positive("--budget-cells", budget_cells);
      o.knapsack.kernel = simd::parse_kernel(kernel);
      o.knapsack.exact_only = exact_only;
      if (!row_perm.empty()) o.row_perm = cli::parse_index_csv(row_perm);
      o.timings = timings;
      return emit(cli::run_solve(file, *text, o));
    }
    if (cmd == verify) {
      cli::VerifyOptions o;
      o.cap = cap;
      o.budget.max_rhs = positive("--budget-rhs", budget_rhs);
      o.budget.max_cells = positive("--budget-cells", budget_cells);
      o.timings = timings;
      return emit(cli::run_verify(file, *text, o));
    }
    if (cmd == bound) {
      cli::BoundOptions o;
      o.vertex = cli::parse_integer_csv(vertex);
      o.cap = cap;
      return emit(cli::run_bound(file, *text, o));
    }
    cli::OracleOptions o;
    o.cap = cap;
    return emit(cli::run_oracle(file, *text, o));
  } catch (const ValidationError& e) {
    return emit(cli::input_error(name, file, e.what()));
  }
}
