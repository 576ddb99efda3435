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

#include "frontend/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace qparse::frontend {

std::string_view to_string(ExprKind kind) {
  switch (kind) {
    case ExprKind::Int: return "Int";
    case ExprKind::Real: return "Real";
    case ExprKind::Imag: return "Imag";
    case ExprKind::Bool: return "Bool";
    case ExprKind::Str: return "Str";
    case ExprKind::Name: return "Name";
    case ExprKind::ModeRef: return "ModeRef";
    case ExprKind::Call: return "Call";
    case ExprKind::Neg: return "Neg";
    case ExprKind::Add: return "Add";
    case ExprKind::Sub: return "Sub";
    case ExprKind::Mul: return "Mul";
    case ExprKind::Div: return "Div";
    case ExprKind::Mod: return "Mod";
    case ExprKind::Pow: return "Pow";
    case ExprKind::Eq: return "Eq";
    case ExprKind::Ne: return "Ne";
    case ExprKind::Lt: return "Lt";
    case ExprKind::Le: return "Le";
    case ExprKind::Gt: return "Gt";
    case ExprKind::Ge: return "Ge";
    case ExprKind::And: return "And";
    case ExprKind::Or: return "Or";
  }
  return "?";
}

bool is_leaf(ExprKind kind) {
  switch (kind) {
    case ExprKind::Int:
    case ExprKind::Real:
    case ExprKind::Imag:
    case ExprKind::Bool:
    case ExprKind::Str:
    case ExprKind::Name:
    case ExprKind::ModeRef:
      return true;
    default:
      return false;
  }
}

bool is_binary(ExprKind kind) { return !is_leaf(kind) && kind != ExprKind::Call && kind != ExprKind::Neg; }

int precedence(ExprKind kind) {
  switch (kind) {
    case ExprKind::Or: return 1;
    case ExprKind::And: return 2;
    case ExprKind::Eq:
    case ExprKind::Ne:
    case ExprKind::Lt:
    case ExprKind::Le:
    case ExprKind::Gt:
    case ExprKind::Ge:
      return 3;
    case ExprKind::Add:
    case ExprKind::Sub:
      return 4;
    case ExprKind::Mul:
    case ExprKind::Div:
    case ExprKind::Mod:
      return 5;
    case ExprKind::Neg: return 6;
    case ExprKind::Pow: return 7;
    default: return 8;
  }
}

AstNode to_ast(const Expr& expr) {
  AstNode node(std::string(to_string(expr.kind)), expr.span);
  switch (expr.kind) {
    case ExprKind::Name:
    case ExprKind::Call:
      node.set("name", expr.name);
      break;
    case ExprKind::ModeRef:
      node.set("name", expr.name);
      node.set("index", expr.value);
      break;
    default:
      if (is_leaf(expr.kind)) node.set("value", expr.value);
      break;
  }
  for (const auto& op : expr.operands) node.add(to_ast(op));
  return node;
}

namespace {

std::string_view spelling(ExprKind kind, const ExprStyle& style) {
  switch (kind) {
    case ExprKind::Add: return "+";
    case ExprKind::Sub: return "-";
    case ExprKind::Mul: return "*";
    case ExprKind::Div: return "/";
    case ExprKind::Mod: return "%";
    case ExprKind::Pow: return style.pow;
    case ExprKind::Eq: return style.eq;
    case ExprKind::Ne: return style.ne;
    case ExprKind::Lt: return "<";
    case ExprKind::Le: return "<=";
    case ExprKind::Gt: return ">";
    case ExprKind::Ge: return ">=";
    case ExprKind::And: return style.and_;
    case ExprKind::Or: return style.or_;
    default: throw std::logic_error("not a binary operator");
  }
}

void print(const Expr& e, const ExprStyle& style, std::string& out);

void print_wrapped(const Expr& e, bool parens, const ExprStyle& style, std::string& out) {
  if (parens) out += '(';
  print(e, style, out);
  if (parens) out += ')';
}

void print(const Expr& e, const ExprStyle& style, std::string& out) {
  switch (e.kind) {
    case ExprKind::Int:
      out += std::to_string(std::get<std::int64_t>(e.value));
      return;
    case ExprKind::Real:
      out += format_real(std::get<double>(e.value));
      return;
    case ExprKind::Imag: {
      // format_real always adds ".0" or an exponent; the suffix follows it
      out += format_real(std::get<double>(e.value));
      out += 'j';
      return;
    }
    case ExprKind::Bool:
      out += std::get<bool>(e.value) ? "true" : "false";
      return;
    case ExprKind::Str:
      out += '"';
      out += std::get<std::string>(e.value);
      out += '"';
      return;
    case ExprKind::Name:
      out += e.name;
      return;
    case ExprKind::ModeRef:
      out += e.name + "[" + std::to_string(std::get<std::int64_t>(e.value)) + "]";
      return;
    case ExprKind::Call:
      out += e.name;
      out += '(';
      for (std::size_t i = 0; i < e.operands.size(); ++i) {
        if (i) out += ", ";
        print(e.operands[i], style, out);
      }
      out += ')';
      return;
    case ExprKind::Neg: {
      const Expr& x = e.operands.at(0);
      const bool parens = precedence(x.kind) < precedence(ExprKind::Neg);
      std::string inner;
      print_wrapped(x, parens, style, inner);
      out += '-';
      if (style.space_before_negated_number && !inner.empty() &&
          (std::isdigit(static_cast<unsigned char>(inner[0])) || inner[0] == '.' || inner[0] == '-'))
        out += ' ';
      out += inner;
      return;
    }
    default:
      break;
  }

  const int p = precedence(e.kind);
  const Expr& lhs = e.operands.at(0);
  const Expr& rhs = e.operands.at(1);
  bool lhs_parens = false;
  bool rhs_parens = false;
  if (e.kind == ExprKind::Pow) {
    // base is a primary; exponent is a unary expression
    lhs_parens = precedence(lhs.kind) <= p;
    rhs_parens = precedence(rhs.kind) < precedence(ExprKind::Neg);
  } else if (p == 3) {
    lhs_parens = precedence(lhs.kind) <= p;
    rhs_parens = precedence(rhs.kind) <= p;
  } else {
    lhs_parens = precedence(lhs.kind) < p;
    rhs_parens = precedence(rhs.kind) <= p;
  }
  print_wrapped(lhs, lhs_parens, style, out);
  out += ' ';
  out += spelling(e.kind, style);
  out += ' ';
  print_wrapped(rhs, rhs_parens, style, out);
}

}  // namespace

std::string print_expr(const Expr& expr, const ExprStyle& style) {
  std::string out;
  print(expr, style, out);
  return out;
}

}  // namespace qparse::frontend
