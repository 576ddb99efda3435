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

#include <string>
#include <string_view>
#include <vector>

#include "frontend/ast.hpp"
#include "frontend/token.hpp"

namespace qparse::frontend {

enum class ExprKind {
  // leaves
  Int,
  Real,
  Imag,  // imaginary literal, `2.5j`
  Bool,
  Str,
  Name,
  ModeRef,  // `q[0]`
  // interior
  Call,
  Neg,
  Add,
  Sub,
  Mul,
  Div,
  Mod,
  Pow,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  And,
  Or,
};

std::string_view to_string(ExprKind kind);
bool is_binary(ExprKind kind);
bool is_leaf(ExprKind kind);

/// Expression tree shared by all three frontends. Literal payloads live in
/// `value`; Name, Call and ModeRef carry their identifier in `name` (ModeRef
/// keeps its index in `value`).
struct Expr {
  ExprKind kind = ExprKind::Int;
  Span span;
  Scalar value;
  std::string name;
  std::vector<Expr> operands;

  static Expr literal(ExprKind kind, Scalar value, Span span) {
    Expr e;
    e.kind = kind;
    e.value = std::move(value);
    e.span = span;
    return e;
  }
  static Expr identifier(std::string name, Span span) {
    Expr e;
    e.kind = ExprKind::Name;
    e.name = std::move(name);
    e.span = span;
    return e;
  }
  static Expr unary(ExprKind kind, Expr operand, Span span) {
    Expr e;
    e.kind = kind;
    e.span = span;
    e.operands.push_back(std::move(operand));
    return e;
  }
  static Expr binary(ExprKind kind, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = kind;
    e.span = Span::cover(lhs.span, rhs.span);
    e.operands.push_back(std::move(lhs));
    e.operands.push_back(std::move(rhs));
    return e;
  }
};

AstNode to_ast(const Expr& expr);

/// Binding strength used by the printer; larger binds tighter.
int precedence(ExprKind kind);

/// Language-specific spelling for printing.
struct ExprStyle {
  std::string_view pow = "**";
  std::string_view eq = "==";
  std::string_view ne = "!=";
  std::string_view and_ = "&&";
  std::string_view or_ = "||";
  /// Print `Neg(2)` as `- 2` so it cannot be confused with a signed literal.
  bool space_before_negated_number = false;
};

/// Prints with the minimum parentheses needed for the grammar
///   or < and < comparison (non-associative) < additive < multiplicative
///   < unary minus < power (right-associative, exponent is unary)
/// to reparse to the same tree.
std::string print_expr(const Expr& expr, const ExprStyle& style);

}  // namespace qparse::frontend
