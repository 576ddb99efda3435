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

#include "frontend/overloaded.hpp"
#include "qmasm/ast.hpp"

namespace qparse::qmasm {

namespace {

const frontend::ExprStyle kStyle{.eq = "=", .ne = "/=", .space_before_negated_number = true};

std::string value_text(const Expr& e) {
  switch (e.kind) {
    case frontend::ExprKind::Int:
    case frontend::ExprKind::Real: return print_expression(e);
    case frontend::ExprKind::Name:
      if (e.name.starts_with('$')) return e.name;
      return "(" + e.name + ")";
    default: return "(" + print_expression(e) + ")";
  }
}

std::string_view relation_glyph(RelationKind kind) {
  switch (kind) {
    case RelationKind::Chain: return "=";
    case RelationKind::AntiChain: return "/=";
    case RelationKind::Equiv: return "<->";
  }
  return "?";
}

void print_block(const Block& block, int depth, std::string& out);

void print_statement(const Statement& stmt, int depth, std::string& out) {
  const std::string indent(2 * depth, ' ');
  out += indent;
  std::visit(overloaded{
                 [&](const Weight& w) { out += w.symbol + " " + value_text(w.value) + "\n"; },
                 [&](const Coupling& c) { out += c.a + " " + c.b + " " + value_text(c.value) + "\n"; },
                 [&](const Relation& r) {
                   out += r.a + " " + std::string(relation_glyph(r.kind)) + " " + r.b + "\n";
                 },
                 [&](const Pin& p) { out += p.symbol + " := " + print_expression(p.value) + "\n"; },
                 [&](const MacroDef& m) {
                   out += "!begin_macro " + m.name + "\n";
                   print_block(m.body, depth + 1, out);
                   out += indent + "!end_macro " + m.name + "\n";
                 },
                 [&](const UseMacro& u) {
                   out += "!use_macro " + u.macro;
                   for (const auto& i : u.instances) out += " " + i.name;
                   out += "\n";
                 },
                 [&](const Include& i) { out += "!include \"" + i.path + "\"\n"; },
                 [&](const Assert& a) { out += "!assert " + print_expression(a.condition) + "\n"; },
                 [&](const Let& l) { out += "!let " + l.var + " := " + print_expression(l.value) + "\n"; },
                 [&](const ForLoop& f) {
                   out += "!for " + f.var + " := " + print_expression(f.lo) + " .. " + print_expression(f.hi);
                   if (f.step) out += " step " + print_expression(*f.step);
                   out += "\n";
                   print_block(f.body, depth + 1, out);
                   out += indent + "!end_for\n";
                 },
                 [&](const IfElse& s) {
                   out += "!if " + print_expression(s.condition) + "\n";
                   print_block(s.then_body, depth + 1, out);
                   if (s.else_body) {
                     out += indent + "!else\n";
                     print_block(*s.else_body, depth + 1, out);
                   }
                   out += indent + "!end_if\n";
                 },
             },
             stmt.node);
}

void print_block(const Block& block, int depth, std::string& out) {
  for (const auto& s : block) print_statement(s, depth, out);
}

}  // namespace

std::string print_expression(const Expr& expr) { return frontend::print_expr(expr, kStyle); }

std::string print_program(const Program& program) {
  std::string out;
  print_block(program.statements, 0, out);
  return out;
}

}  // namespace qparse::qmasm
