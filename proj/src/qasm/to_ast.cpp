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
#include "qasm/ast.hpp"

namespace qparse::qasm {

using frontend::AstNode;

namespace {

AstNode ref_node(const QubitRef& ref) {
  AstNode n("Ref", ref.span);
  n.set("reg", ref.reg);
  if (ref.index) n.set("index", *ref.index);
  return n;
}

AstNode apply_node(const GateApply& g) {
  AstNode n("GateApply", g.span);
  n.set("name", g.name);
  for (const auto& p : g.params) n.add(frontend::to_ast(p));
  for (const auto& t : g.targets) n.add(ref_node(t));
  return n;
}

AstNode measure_node(const Measure& m) {
  AstNode n("Measure", m.span);
  n.add(ref_node(m.source)).add(ref_node(m.dest));
  return n;
}

AstNode reset_node(const Reset& r) {
  AstNode n("Reset", r.span);
  n.add(ref_node(r.target));
  return n;
}

AstNode statement_node(const Statement& stmt) {
  return std::visit(
      overloaded{
          [](const RegisterDecl& d) {
            AstNode n("RegisterDecl", d.span);
            n.set("type", d.quantum ? "quantum" : "classical").set("name", d.name).set("size", d.size);
            return n;
          },
          [](const GateDef& d) {
            AstNode n("GateDef", d.span);
            n.set("name", d.name);
            for (const auto& p : d.params) n.add(AstNode("Param", d.span).set("name", p));
            for (const auto& q : d.qargs) n.add(AstNode("Arg", d.span).set("name", q));
            for (const auto& g : d.body) n.add(apply_node(g));
            return n;
          },
          [](const GateApply& g) { return apply_node(g); },
          [](const Measure& m) { return measure_node(m); },
          [](const Reset& r) { return reset_node(r); },
          [](const Barrier& b) {
            AstNode n("Barrier", b.span);
            for (const auto& t : b.targets) n.add(ref_node(t));
            return n;
          },
          [](const IfStmt& s) {
            AstNode n("If", s.span);
            n.set("creg", s.creg).set("value", s.value);
            n.add(std::visit(overloaded{[](const GateApply& g) { return apply_node(g); },
                                        [](const Measure& m) { return measure_node(m); },
                                        [](const Reset& r) { return reset_node(r); }},
                             s.body));
            return n;
          },
          [](const Include& i) {
            AstNode n("Include", i.span);
            n.set("path", i.path);
            return n;
          },
      },
      stmt);
}

}  // namespace

AstNode to_ast(const Program& program) {
  AstNode root("Program", program.span);
  if (program.version) {
    AstNode v("Version", program.version->span);
    v.set("major", std::int64_t{program.version->major}).set("minor", std::int64_t{program.version->minor});
    root.add(std::move(v));
  }
  for (const auto& s : program.statements) root.add(statement_node(s));
  return root;
}

}  // namespace qparse::qasm
