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
#include <utility>
#include <vector>

#include "frontend/ast.hpp"
#include "frontend/expr.hpp"

namespace qparse::blackbird {

using frontend::Expr;
using frontend::Span;

enum class DeclType { Int, Float, Complex, Bool, Str, Array };

std::string_view to_string(DeclType type);

struct NameHeader {
  std::string name;
  Span span;
};

struct VersionHeader {
  int major = 1;
  int minor = 0;
  Span span;
};

struct TargetOption {
  std::string key;
  Expr value;
};

struct TargetHeader {
  std::string name;
  std::vector<TargetOption> options;
  Span span;
};

/// Rectangular, row-major.
struct ArrayLiteral {
  std::vector<std::vector<Expr>> rows;
  Span span;

  std::size_t row_count() const { return rows.size(); }
  std::size_t column_count() const { return rows.empty() ? 0 : rows.front().size(); }
};

struct Declaration {
  DeclType type = DeclType::Float;
  std::string name;
  std::optional<DeclType> element_type;  // `complex array U =`
  std::optional<Expr> value;             // scalar declarations
  std::optional<ArrayLiteral> array;     // array declarations
  Span span;
};

struct ModeStatement {
  std::string op;
  std::vector<Expr> args;
  std::vector<std::int64_t> modes;
  Span span;
};

struct Program {
  std::optional<NameHeader> name;
  std::optional<VersionHeader> version;
  std::optional<TargetHeader> target;
  std::vector<Declaration> declarations;
  std::vector<ModeStatement> statements;
  Span span;
};

/// Node kinds: Program, NameHeader, VersionHeader, Target (children Option),
/// Decl, ArrayLiteral (children Row), ModeStatement (children: argument
/// expressions, then Mode), and expression kinds.
frontend::AstNode to_ast(const Program& program);

/// Canonical source text; reparses to a structurally identical program.
std::string print_program(const Program& program);

std::string print_expression(const Expr& expr);

}  // namespace qparse::blackbird
