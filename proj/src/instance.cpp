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

#include "knapred/instance.hpp"

#include <algorithm>
#include <json.hpp>

#include "knapred/errors.hpp"

namespace knapred {

namespace {

using json = nlohmann::json;

Integer integer_field(const json& node, std::string_view where) {
  if (!node.is_string()) {
    throw ParseError(std::string(where) + ": expected a decimal-integer string");
  }
  const auto& text = node.get_ref<const std::string&>();
  auto value = parse_decimal(text);
  if (!value) {
    throw ParseError(std::string(where) + ": not a decimal integer: \"" + text + "\"");
  }
  return *value;
}

Vector integer_array(const json& node, std::string_view where) {
  if (!node.is_array()) throw ParseError(std::string(where) + ": expected an array");
  Vector out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(integer_field(node[i], std::string(where) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

bool BoxBounds::all_finite() const {
  return std::all_of(upper.begin(), upper.end(), [](const auto& u) { return u.has_value(); });
}

Point ReducedInstance::lift(std::span<const Integer> reduced_x) const {
  if (reduced_x.size() != column_map.size()) {
    throw DimensionMismatch("lift: point has " + std::to_string(reduced_x.size()) +
                            " coordinates, expected " + std::to_string(column_map.size()));
  }
  Point x(original_cols, Integer(0));
  for (std::size_t j = 0; j < column_map.size(); ++j) x[column_map[j]] = reduced_x[j];
  return x;
}

IPInstance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "A" && key != "b" && key != "c" && key != "sense") {
      throw ParseError("unknown key \"" + key + "\"");
    }
  }
  for (const char* key : {"A", "b", "c"}) {
    if (!doc.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  }

  IPInstance inst;
  const auto& rows = doc["A"];
  if (!rows.is_array()) throw ParseError("A: expected an array of rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    inst.A.push_back(integer_array(rows[i], "A[" + std::to_string(i) + "]"));
  }
  inst.b = integer_array(doc["b"], "b");
  inst.c = integer_array(doc["c"], "c");

  if (doc.contains("sense")) {
    const auto& s = doc["sense"];
    if (!s.is_string()) throw ParseError("sense: expected \"min\" or \"max\"");
    const auto& word = s.get_ref<const std::string&>();
    if (word == "min") {
      inst.sense = Sense::Minimize;
    } else if (word == "max") {
      inst.sense = Sense::Maximize;
    } else {
      throw ParseError("sense: expected \"min\" or \"max\", got \"" + word + "\"");
    }
  }

  validate(inst);
  return inst;
}

std::string serialize_instance(const IPInstance& inst) {
  nlohmann::ordered_json doc;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : inst.A) rows.push_back(to_decimal(row));
  doc["A"] = std::move(rows);
  doc["b"] = to_decimal(inst.b);
  doc["c"] = to_decimal(inst.c);
  doc["sense"] = inst.sense == Sense::Minimize ? "min" : "max";
  return doc.dump();
}

void validate(const IPInstance& inst) {
  const std::size_t m = inst.A.size();
  if (m == 0) throw ValidationError("A has no rows (m = 0)");
  const std::size_t n = inst.A.front().size();
  if (n == 0) throw ValidationError("A has no columns (n = 0)");
  for (std::size_t i = 0; i < m; ++i) {
    if (inst.A[i].size() != n) {
      throw DimensionMismatch("A row " + std::to_string(i) + " has " +
                              std::to_string(inst.A[i].size()) + " entries, expected " +
                              std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(inst.A[i][j]) < 0) {
        throw ValidationError("A[" + std::to_string(i) + "][" + std::to_string(j) +
                              "] is negative");
      }
    }
  }
  if (inst.b.size() != m) {
    throw DimensionMismatch("b has " + std::to_string(inst.b.size()) + " entries, expected " +
                            std::to_string(m));
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (sgn(inst.b[i]) < 0) throw ValidationError("b[" + std::to_string(i) + "] is negative");
  }
  if (inst.c.size() != n) {
    throw DimensionMismatch("c has " + std::to_string(inst.c.size()) + " entries, expected " +
                            std::to_string(n));
  }
}

BoxBounds box_bounds(const IPInstance& inst) {
  BoxBounds box;
  box.upper.resize(inst.cols());
  for (std::size_t j = 0; j < inst.cols(); ++j) {
    for (std::size_t i = 0; i < inst.rows(); ++i) {
      if (sgn(inst.A[i][j]) <= 0) continue;
      Integer q = inst.b[i] / inst.A[i][j];  // truncation == floor for nonnegatives
      if (!box.upper[j] || q < *box.upper[j]) box.upper[j] = q;
    }
  }
  return box;
}

Vector column_sums(const Matrix& A, std::size_t cols) {
  Vector sums(cols, Integer(0));
  for (const auto& row : A) {
    for (std::size_t j = 0; j < cols; ++j) sums[j] += row[j];
  }
  return sums;
}

std::vector<std::size_t> zero_columns(const IPInstance& inst) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < inst.cols(); ++j) {
    bool zero = true;
    for (const auto& row : inst.A) {
      if (sgn(row[j]) != 0) {
        zero = false;
        break;
      }
    }
    if (zero) out.push_back(j);
  }
  return out;
}

namespace {

ReducedInstance remove_columns(const IPInstance& inst, const std::vector<std::size_t>& drop,
                               std::string_view reason) {
  ReducedInstance red;
  red.original_cols = inst.cols();
  red.inner.sense = inst.sense;
  red.inner.b = inst.b;
  red.inner.A.assign(inst.rows(), Vector{});
  std::size_t d = 0;
  for (std::size_t j = 0; j < inst.cols(); ++j) {
    if (d < drop.size() && drop[d] == j) {
      red.dropped.push_back({j, std::string(reason)});
      ++d;
      continue;
    }
    red.column_map.push_back(j);
    red.inner.c.push_back(inst.c[j]);
    for (std::size_t i = 0; i < inst.rows(); ++i) red.inner.A[i].push_back(inst.A[i][j]);
  }
  return red;
}

}  // namespace

ReducedInstance preprocess_zero_columns(const IPInstance& inst) {
  if (inst.sense != Sense::Minimize) {
    throw ValidationError("preprocess_zero_columns expects a minimization instance");
  }
  const auto zeros = zero_columns(inst);
  for (std::size_t j : zeros) {
    if (sgn(inst.c[j]) < 0) {
      throw UnboundedProblem("column " + std::to_string(j) +
                             " of A is all zeros and has negative cost " + to_decimal(inst.c[j]));
    }
  }
  return remove_columns(inst, zeros, "zero column, nonnegative cost: fixed at 0");
}

ReducedInstance drop_zero_columns(const IPInstance& inst) {
  return remove_columns(inst, zero_columns(inst), "zero column");
}

Evaluation evaluate(const IPInstance& inst, std::span<const Integer> x) {
  if (x.size() != inst.cols()) {
    throw DimensionMismatch("point has " + std::to_string(x.size()) +
                            " coordinates, instance has " + std::to_string(inst.cols()) +
                            " columns");
  }
  Evaluation ev;
  ev.feasible = true;
  for (const auto& xj : x) {
    if (sgn(xj) < 0) ev.feasible = false;
  }
  ev.residual.reserve(inst.rows());
  for (std::size_t i = 0; i < inst.rows(); ++i) {
    Integer r = dot(inst.A[i], x) - inst.b[i];
    if (sgn(r) != 0) ev.feasible = false;
    ev.residual.push_back(std::move(r));
  }
  ev.objective = dot(inst.c, x);
  return ev;
}

IPInstance canonicalize(const IPInstance& inst) {
  IPInstance out = inst;
  if (inst.sense == Sense::Maximize) {
    for (auto& cj : out.c) cj = -cj;
    out.sense = Sense::Minimize;
  }
  return out;
}

IPInstance permute_rows(const IPInstance& inst, std::span<const std::size_t> perm) {
  if (perm.size() != inst.rows()) {
    throw DimensionMismatch("row permutation has " + std::to_string(perm.size()) +
                            " entries, instance has " + std::to_string(inst.rows()) + " rows");
  }
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p]) throw ValidationError("not a permutation of the rows");
    seen[p] = true;
  }
  IPInstance out = inst;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out.A[i] = inst.A[perm[i]];
    out.b[i] = inst.b[perm[i]];
  }
  return out;
}

}  // namespace knapred
