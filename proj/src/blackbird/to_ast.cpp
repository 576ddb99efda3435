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

#include "blackbird/ast.hpp"

namespace qparse::blackbird {

using frontend::AstNode;

namespace {

AstNode declaration_node(const Declaration& d) {
  AstNode n("Decl", d.span);
  n.set("type", std::string(to_string(d.type))).set("name", d.name);
  if (d.element_type) n.set("element_type", std::string(to_string(*d.element_type)));
  if (d.value) n.add(frontend::to_ast(*d.value));
  if (d.array) {
    AstNode array("ArrayLiteral", d.array->span);
    array.set("rows", static_cast<std::int64_t>(d.array->row_count()))
        .set("columns", static_cast<std::int64_t>(d.array->column_count()));
    for (const auto& row : d.array->rows) {
      AstNode r("Row", Span::cover(row.front().span, row.back().span));
      for (const auto& e : row) r.add(frontend::to_ast(e));
      array.add(std::move(r));
    }
    n.add(std::move(array));
  }
  return n;
}

AstNode statement_node(const ModeStatement& s) {
  AstNode n("ModeStatement", s.span);
  n.set("op", s.op);
  for (const auto& a : s.args) n.add(frontend::to_ast(a));
  for (auto m : s.modes) n.add(AstNode("Mode", s.span).set("index", m));
  return n;
}

}  // namespace

AstNode to_ast(const Program& program) {
  AstNode root("Program", program.span);
  if (program.name) root.add(AstNode("NameHeader", program.name->span).set("name", program.name->name));
  if (program.version)
    root.add(AstNode("VersionHeader", program.version->span)
                 .set("major", static_cast<std::int64_t>(program.version->major))
                 .set("minor", static_cast<std::int64_t>(program.version->minor)));
  if (program.target) {
    AstNode target("Target", program.target->span);
    target.set("name", program.target->name);
    for (const auto& opt : program.target->options)
      target.add(AstNode("Option", opt.value.span).set("key", opt.key).add(frontend::to_ast(opt.value)));
    root.add(std::move(target));
  }
  for (const auto& d : program.declarations) root.add(declaration_node(d));
  for (const auto& s : program.statements) root.add(statement_node(s));
  return root;
}

}  // namespace qparse::blackbird
