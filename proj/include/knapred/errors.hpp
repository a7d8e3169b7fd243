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

#include <stdexcept>
#include <string>

namespace knapred {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed instance text (bad JSON, non-string numbers, bad digits).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates an instance invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// An all-zero column carries a negative cost while the rest of the
/// program is feasible.
class UnboundedProblem : public Error {
 public:
  using Error::Error;
};

/// The knapsack table would exceed the configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An oracle enumeration exceeded its point or node cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// The exact simplex hit its iteration limit without deciding.
class IterationLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace knapred
