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

using frontend::AstNode;

namespace {

AstNode statement_node(const Statement& stmt);

AstNode block_node(std::string kind, const Block& block, Span fallback) {
  AstNode n(std::move(kind), block.empty() ? fallback : Span::cover(block.front().span(), block.back().span()));
  for (const auto& s : block) n.add(statement_node(s));
  return n;
}

AstNode statement_node(const Statement& stmt) {
  return std::visit(
      overloaded{
          [](const Weight& w) {
            AstNode n("Weight", w.span);
            n.set("symbol", w.symbol).add(frontend::to_ast(w.value));
            return n;
          },
          [](const Coupling& c) {
            AstNode n("Coupling", c.span);
            n.set("a", c.a).set("b", c.b).add(frontend::to_ast(c.value));
            return n;
          },
          [](const Relation& r) {
            AstNode n(std::string(to_string(r.kind)), r.span);
            n.set("a", r.a).set("b", r.b);
            return n;
          },
          [](const Pin& p) {
            AstNode n("Pin", p.span);
            n.set("symbol", p.symbol).add(frontend::to_ast(p.value));
            return n;
          },
          [](const MacroDef& m) {
            AstNode n("MacroDef", m.span);
            n.set("name", m.name);
            for (const auto& s : m.body) n.add(statement_node(s));
            return n;
          },
          [](const UseMacro& u) {
            AstNode n("UseMacro", u.span);
            n.set("macro", u.macro);
            for (const auto& i : u.instances) n.add(AstNode("Instance", i.span).set("name", i.name));
            return n;
          },
          [](const Include& i) { return AstNode("Include", i.span).set("path", i.path); },
          [](const Assert& a) { return AstNode("Assert", a.span).add(frontend::to_ast(a.condition)); },
          [](const Let& l) {
            AstNode n("Let", l.span);
            n.set("var", l.var).add(frontend::to_ast(l.value));
            return n;
          },
          [](const ForLoop& f) {
            AstNode n("For", f.span);
            n.set("var", f.var);
            AstNode range("Range", Span::cover(f.lo.span, f.step ? f.step->span : f.hi.span));
            range.add(frontend::to_ast(f.lo)).add(frontend::to_ast(f.hi));
            if (f.step) range.add(frontend::to_ast(*f.step));
            n.add(std::move(range));
            for (const auto& s : f.body) n.add(statement_node(s));
            return n;
          },
          [](const IfElse& s) {
            AstNode n("If", s.span);
            n.add(frontend::to_ast(s.condition));
            n.add(block_node("Then", s.then_body, s.condition.span));
            if (s.else_body) n.add(block_node("Else", *s.else_body, s.span));
            return n;
          },
      },
      stmt.node);
}

}  // namespace

AstNode to_ast(const Program& program) {
  AstNode root("Program", program.span);
  for (const auto& s : program.statements) root.add(statement_node(s));
  return root;
}

}  // namespace qparse::qmasm
