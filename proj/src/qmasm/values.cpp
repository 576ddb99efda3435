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

#include "qmasm/values.hpp"

#include <cmath>
#include <limits>

#include "frontend/diagnostic.hpp"
#include "frontend/overloaded.hpp"

namespace qparse::qmasm {

using frontend::DiagnosticError;
using frontend::Expr;
using frontend::ExprKind;

std::uint64_t Range::size() const {
  // Differences are taken in unsigned arithmetic, which cannot overflow.
  const auto ulo = static_cast<std::uint64_t>(lo), uhi = static_cast<std::uint64_t>(hi);
  if (step > 0) return hi < lo ? 0 : (uhi - ulo) / static_cast<std::uint64_t>(step) + 1;
  if (step < 0) return lo < hi ? 0 : (ulo - uhi) / (0 - static_cast<std::uint64_t>(step)) + 1;
  return 0;
}

std::int64_t Range::at(std::uint64_t i) const {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + i * static_cast<std::uint64_t>(step));
}

std::string type_name(const ClassicalValue& value) {
  return std::visit(overloaded{
                        [](std::int64_t) { return "Int"; },
                        [](double) { return "Float"; },
                        [](bool) { return "Bool"; },
                        [](const Range&) { return "Range"; },
                        [](const Iterator&) { return "Iterator"; },
                    },
                    value);
}

std::string variable_key(std::string_view name) {
  if (!name.empty() && name.front() == '$') name.remove_prefix(1);
  return std::string(name);
}

namespace {

// Iterators read as their current element.
ClassicalValue scalar(ClassicalValue v) {
  if (const auto* it = std::get_if<Iterator>(&v)) return it->current();
  return v;
}

bool is_numeric(const ClassicalValue& v) {
  return std::holds_alternative<std::int64_t>(v) || std::holds_alternative<double>(v);
}

double as_real(const ClassicalValue& v) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
  return std::get<double>(v);
}

[[noreturn]] void type_error(const Expr& e, const std::string& what) {
  throw DiagnosticError("SEM314", what, e.span);
}

ClassicalValue finite(const Expr& e, double v) {
  if (!std::isfinite(v)) throw DiagnosticError("SEM315", "expression does not evaluate to a finite number", e.span);
  return v;
}

template <typename Op>
std::int64_t checked(const Expr& e, Op op, std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (op(a, b, &r)) type_error(e, "integer overflow");
  return r;
}

constexpr auto kAdd = [](std::int64_t a, std::int64_t b, std::int64_t* r) { return __builtin_add_overflow(a, b, r); };
constexpr auto kSub = [](std::int64_t a, std::int64_t b, std::int64_t* r) { return __builtin_sub_overflow(a, b, r); };
constexpr auto kMul = [](std::int64_t a, std::int64_t b, std::int64_t* r) { return __builtin_mul_overflow(a, b, r); };

std::int64_t int_pow(const Expr& e, std::int64_t base, std::int64_t exp) {
  std::int64_t result = 1;
  while (exp > 0) {
    if (exp & 1) result = checked(e, kMul, result, base);
    exp >>= 1;
    if (exp > 0) base = checked(e, kMul, base, base);
  }
  return result;
}

const char* op_text(ExprKind kind) {
  switch (kind) {
    case ExprKind::Add: return "+";
    case ExprKind::Sub: return "-";
    case ExprKind::Mul: return "*";
    case ExprKind::Div: return "/";
    case ExprKind::Mod: return "%";
    case ExprKind::Pow: return "**";
    case ExprKind::Eq: return "=";
    case ExprKind::Ne: return "/=";
    case ExprKind::Lt: return "<";
    case ExprKind::Le: return "<=";
    case ExprKind::Gt: return ">";
    case ExprKind::Ge: return ">=";
    case ExprKind::And: return "&&";
    case ExprKind::Or: return "||";
    default: return "?";
  }
}

ClassicalValue arithmetic(const Expr& e, const ClassicalValue& a, const ClassicalValue& b) {
  if (!is_numeric(a) || !is_numeric(b))
    type_error(e, std::string("operator '") + op_text(e.kind) + "' needs numbers, got " + type_name(a) + " and " +
                      type_name(b));
  const auto* ia = std::get_if<std::int64_t>(&a);
  const auto* ib = std::get_if<std::int64_t>(&b);
  if (ia && ib) {
    switch (e.kind) {
      case ExprKind::Add: return checked(e, kAdd, *ia, *ib);
      case ExprKind::Sub: return checked(e, kSub, *ia, *ib);
      case ExprKind::Mul: return checked(e, kMul, *ia, *ib);
      case ExprKind::Div:
      case ExprKind::Mod:
        if (*ib == 0) throw DiagnosticError("SEM307", "division by zero", e.span);
        if (*ia == std::numeric_limits<std::int64_t>::min() && *ib == -1) type_error(e, "integer overflow");
        return e.kind == ExprKind::Div ? *ia / *ib : *ia % *ib;
      case ExprKind::Pow:
        if (*ib >= 0) return int_pow(e, *ia, *ib);
        if (*ia == 0) throw DiagnosticError("SEM307", "division by zero", e.span);
        return finite(e, std::pow(static_cast<double>(*ia), static_cast<double>(*ib)));
      default: break;
    }
  }
  const double x = as_real(a), y = as_real(b);
  switch (e.kind) {
    case ExprKind::Add: return finite(e, x + y);
    case ExprKind::Sub: return finite(e, x - y);
    case ExprKind::Mul: return finite(e, x * y);
    case ExprKind::Div:
      if (y == 0.0) throw DiagnosticError("SEM307", "division by zero", e.span);
      return finite(e, x / y);
    case ExprKind::Mod:
      if (y == 0.0) throw DiagnosticError("SEM307", "division by zero", e.span);
      return finite(e, std::fmod(x, y));
    case ExprKind::Pow:
      if (x == 0.0 && y < 0) throw DiagnosticError("SEM307", "division by zero", e.span);
      return finite(e, std::pow(x, y));
    default: break;
  }
  type_error(e, "unsupported operator");
}

bool compare(const Expr& e, const ClassicalValue& a, const ClassicalValue& b) {
  const auto* ba = std::get_if<bool>(&a);
  const auto* bb = std::get_if<bool>(&b);
  if (ba && bb && (e.kind == ExprKind::Eq || e.kind == ExprKind::Ne)) return (*ba == *bb) == (e.kind == ExprKind::Eq);
  if (!is_numeric(a) || !is_numeric(b))
    type_error(e, std::string("cannot compare ") + type_name(a) + " and " + type_name(b) + " with '" +
                      op_text(e.kind) + "'");
  int order = 0;
  const auto* ia = std::get_if<std::int64_t>(&a);
  const auto* ib = std::get_if<std::int64_t>(&b);
  if (ia && ib) {
    order = *ia < *ib ? -1 : *ia > *ib ? 1 : 0;
  } else {
    const double x = as_real(a), y = as_real(b);
    order = x < y ? -1 : x > y ? 1 : 0;
  }
  switch (e.kind) {
    case ExprKind::Eq: return order == 0;
    case ExprKind::Ne: return order != 0;
    case ExprKind::Lt: return order < 0;
    case ExprKind::Le: return order <= 0;
    case ExprKind::Gt: return order > 0;
    default: return order >= 0;
  }
}

bool truth(const Expr& e, const ClassicalValue& v) {
  if (const auto* b = std::get_if<bool>(&v)) return *b;
  type_error(e, std::string("operator '") + op_text(e.kind) + "' needs Bool operands, got " + type_name(v));
}

const ClassicalValue& lookup(const Expr& e, const Bindings& bindings) {
  const auto it = bindings.find(variable_key(e.name));
  if (it == bindings.end()) throw DiagnosticError("SEM305", "unbound variable '" + e.name + "'", e.span);
  return it->second;
}

}  // namespace

ClassicalValue evaluate(const Expr& e, const Bindings& bindings) {
  switch (e.kind) {
    case ExprKind::Int: return std::get<std::int64_t>(e.value);
    case ExprKind::Real: return finite(e, std::get<double>(e.value));
    case ExprKind::Bool: return std::get<bool>(e.value);
    case ExprKind::Name: return scalar(lookup(e, bindings));
    case ExprKind::Neg: {
      const ClassicalValue v = evaluate(e.operands[0], bindings);
      if (const auto* i = std::get_if<std::int64_t>(&v)) {
        if (*i == std::numeric_limits<std::int64_t>::min()) type_error(e, "integer overflow");
        return -*i;
      }
      if (const auto* d = std::get_if<double>(&v)) return -*d;
      type_error(e, "unary '-' needs a number, got " + type_name(v));
    }
    case ExprKind::And:
    case ExprKind::Or: {
      const bool lhs = truth(e, evaluate(e.operands[0], bindings));
      if (lhs == (e.kind == ExprKind::Or)) return lhs;
      return truth(e, evaluate(e.operands[1], bindings));
    }
    case ExprKind::Eq:
    case ExprKind::Ne:
    case ExprKind::Lt:
    case ExprKind::Le:
    case ExprKind::Gt:
    case ExprKind::Ge:
      return compare(e, evaluate(e.operands[0], bindings), evaluate(e.operands[1], bindings));
    case ExprKind::Add:
    case ExprKind::Sub:
    case ExprKind::Mul:
    case ExprKind::Div:
    case ExprKind::Mod:
    case ExprKind::Pow:
      return arithmetic(e, evaluate(e.operands[0], bindings), evaluate(e.operands[1], bindings));
    default:
      type_error(e, "expression kind " + std::string(frontend::to_string(e.kind)) + " cannot be evaluated");
  }
}

Expr substitute(const Expr& e, const Bindings& bindings) {
  if (e.kind == ExprKind::Name) {
    const ClassicalValue v = scalar(lookup(e, bindings));
    if (const auto* i = std::get_if<std::int64_t>(&v)) return Expr::literal(ExprKind::Int, *i, e.span);
    if (const auto* d = std::get_if<double>(&v)) return Expr::literal(ExprKind::Real, *d, e.span);
    if (const auto* b = std::get_if<bool>(&v)) return Expr::literal(ExprKind::Bool, *b, e.span);
    type_error(e, "variable '" + e.name + "' holds a " + type_name(v) + ", not a scalar");
  }
  Expr out = e;
  for (auto& op : out.operands) op = substitute(op, bindings);
  return out;
}

}  // namespace qparse::qmasm
