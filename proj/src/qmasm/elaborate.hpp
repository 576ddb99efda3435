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

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qmasm/ast.hpp"
#include "qmasm/includes.hpp"
#include "qmasm/values.hpp"

namespace qparse::qmasm {

struct ResolvedWeight {
  std::string symbol;
  double value = 0;
  Span span;
};

struct ResolvedCoupling {
  std::string a;
  std::string b;
  double value = 0;
  Span span;
};

struct ResolvedRelation {
  RelationKind kind = RelationKind::Chain;
  std::string a;
  std::string b;
  Span span;
};

struct ResolvedPin {
  std::string symbol;
  bool value = false;
  Span span;
};

/// Condition with every variable replaced by its value.
struct Assertion {
  Expr condition;
  std::string text;  // as printed after substitution
  Span span;
};

using ResolvedStatement = std::variant<ResolvedWeight, ResolvedCoupling, ResolvedRelation, ResolvedPin, Assertion>;

struct MacroEnvironment {
  std::map<std::string, MacroDef> macros;
  Bindings bindings;
  int include_depth = 0;
};

inline constexpr std::uint64_t kMaxLoopIterations = 1'000'000;

/// Runs loops and conditionals, binds `!let` variables (in statement order,
/// visible to everything after them), interpolates `$var` in symbols and
/// evaluates every value. A loop variable is bound to an Iterator only
/// inside its loop. A register pin such as `r[3:0] := 5` becomes one pin per
/// bit, most significant bit first.
///
/// Errors: SEM305 unbound variable, SEM306 non-boolean condition or pin,
/// SEM307 division by zero, SEM314 type error (including register misuse
/// and malformed symbols), SEM315 non-finite value, SEM316 bad loop range.
std::vector<ResolvedStatement> elaborate(const Block& statements, MacroEnvironment& env);

/// Include resolution, macro expansion and elaboration in sequence.
std::vector<ResolvedStatement> analyze(const Program& program, const SourceLoader& loader);

/// Replaces each `$name` in a symbol by the integer bound to `name`.
std::string interpolate(const std::string& symbol, const Bindings& bindings, const Span& span);

}  // namespace qparse::qmasm
