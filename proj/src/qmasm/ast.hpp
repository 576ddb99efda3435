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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "frontend/ast.hpp"
#include "frontend/expr.hpp"

namespace qparse::qmasm {

using frontend::Expr;
using frontend::Span;

/// Symbols are kept as written, including a `!next.` prefix and any `$var`
/// interpolations; both are resolved by the semantic passes.
struct Weight {
  std::string symbol;
  Expr value;
  Span span;
};

struct Coupling {
  std::string a;
  std::string b;
  Expr value;
  Span span;
};

enum class RelationKind { Chain, AntiChain, Equiv };

std::string_view to_string(RelationKind kind);

struct Relation {
  RelationKind kind = RelationKind::Chain;
  std::string a;
  std::string b;
  Span span;
};

struct Pin {
  std::string symbol;
  Expr value;
  Span span;
};

struct Instance {
  std::string name;
  Span span;
};

struct UseMacro {
  std::string macro;
  std::vector<Instance> instances;
  Span span;
};

struct Include {
  std::string path;
  Span span;
};

struct Assert {
  Expr condition;
  Span span;
};

struct Let {
  std::string var;
  Expr value;
  Span span;
};

struct Statement;
using Block = std::vector<Statement>;

struct MacroDef {
  std::string name;
  Block body;
  Span span;
};

/// `!for var := lo .. hi [step s]`; the range is inclusive.
struct ForLoop {
  std::string var;
  Expr lo;
  Expr hi;
  std::optional<Expr> step;
  Block body;
  Span span;
};

struct IfElse {
  Expr condition;
  Block then_body;
  std::optional<Block> else_body;
  Span span;
};

struct Statement {
  using Node = std::variant<Weight, Coupling, Relation, Pin, MacroDef, UseMacro, Include, Assert, ForLoop, IfElse, Let>;
  Node node;

  Span span() const;
};

struct Program {
  Block statements;
  Span span;
};

/// Node kinds: Program, Weight, Coupling, Chain, AntiChain, Equiv, Pin,
/// MacroDef, UseMacro (children Instance), Include, Assert, For (children
/// Range, then the body), If (children condition, Then, optional Else), Let,
/// and expression kinds.
frontend::AstNode to_ast(const Program& program);

/// Canonical source text; reparses to a structurally identical program.
std::string print_program(const Program& program);

std::string print_expression(const Expr& expr);

}  // namespace qparse::qmasm
