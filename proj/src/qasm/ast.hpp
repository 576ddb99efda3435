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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "frontend/ast.hpp"
#include "frontend/expr.hpp"

namespace qparse::qasm {

using frontend::Expr;
using frontend::Span;

/// `q[3]`, or a bare name: a gate-body argument, or a whole register in
/// barrier, measure and reset.
struct QubitRef {
  std::string reg;
  std::optional<std::int64_t> index;
  Span span;
};

struct RegisterDecl {
  bool quantum = true;
  std::string name;
  std::int64_t size = 0;
  Span span;
};

struct GateApply {
  std::string name;
  std::vector<Expr> params;
  std::vector<QubitRef> targets;
  Span span;
};

struct GateDef {
  std::string name;
  std::vector<std::string> params;
  std::vector<std::string> qargs;
  std::vector<GateApply> body;
  Span span;
};

struct Measure {
  QubitRef source;
  QubitRef dest;
  Span span;
};

struct Reset {
  QubitRef target;
  Span span;
};

struct Barrier {
  std::vector<QubitRef> targets;
  Span span;
};

using GuardedOp = std::variant<GateApply, Measure, Reset>;

struct IfStmt {
  std::string creg;
  std::int64_t value = 0;
  GuardedOp body;
  Span span;
};

struct Include {
  std::string path;
  Span span;
};

using Statement = std::variant<RegisterDecl, GateDef, GateApply, Measure, Reset, Barrier, IfStmt, Include>;

struct Version {
  int major = 2;
  int minor = 0;
  Span span;
};

struct Program {
  std::optional<Version> version;
  std::vector<Statement> statements;
  Span span;
};

/// Lowers to the uniform node shape. Node kinds: Program, Version,
/// RegisterDecl, GateDef (children Param*, Arg*, GateApply*), GateApply
/// (children: parameter expressions, then Ref*), Measure, Reset, Barrier, If,
/// Include, and expression kinds.
frontend::AstNode to_ast(const Program& program);

/// Canonical source text; reparses to a structurally identical program.
std::string print_program(const Program& program);

/// Parameter expression in QASM spelling (`^` for powers).
std::string print_expression(const Expr& expr);

}  // namespace qparse::qasm
