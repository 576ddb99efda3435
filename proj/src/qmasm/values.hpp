// Copyright 2026 The qparse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "frontend/expr.hpp"

namespace qparse::qmasm {

/// Inclusive integer range with a non-zero step.
struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t step = 1;

  std::uint64_t size() const;
  std::int64_t at(std::uint64_t i) const;
};

/// Position within a Range; reads as the current element.
struct Iterator {
  Range range;
  std::uint64_t position = 0;

  std::int64_t current() const { return range.at(position); }
};

using ClassicalValue = std::variant<std::int64_t, double, bool, Range, Iterator>;

std::string type_name(const ClassicalValue& value);

/// Variables are bound without their `$`; lookups strip a leading `$`.
using Bindings = std::map<std::string, ClassicalValue>;

std::string variable_key(std::string_view name);

/// Evaluates an expression over the bindings.
///
/// Integer arithmetic stays integral (`/` truncates, `**` with a
/// non-negative exponent is exact); mixing with a real promotes to real.
/// Errors: SEM305 unbound variable, SEM307 division by zero, SEM314 type
/// error or integer overflow, SEM315 non-finite result.
ClassicalValue evaluate(const frontend::Expr& expr, const Bindings& bindings);

/// Replaces every variable reference by its bound value as a literal.
/// Errors: SEM305 unbound variable, SEM314 non-scalar value.
frontend::Expr substitute(const frontend::Expr& expr, const Bindings& bindings);

}  // namespace qparse::qmasm
