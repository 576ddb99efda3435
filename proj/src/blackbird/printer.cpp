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

namespace {

const frontend::ExprStyle kStyle{};

std::string join_exprs(const std::vector<Expr>& exprs) {
  std::string out;
  for (std::size_t i = 0; i < exprs.size(); ++i) out += (i ? ", " : "") + print_expression(exprs[i]);
  return out;
}

std::string declaration_text(const Declaration& d) {
  if (d.type != DeclType::Array) return std::string(to_string(d.type)) + " " + d.name + " = " + print_expression(*d.value) + "\n";
  std::string out;
  if (d.element_type) out += std::string(to_string(*d.element_type)) + " ";
  out += "array " + d.name + " =\n";
  for (const auto& row : d.array->rows) out += "    " + join_exprs(row) + "\n";
  return out;
}

std::string statement_text(const ModeStatement& s) {
  std::string out = s.op;
  if (!s.args.empty()) out += "(" + join_exprs(s.args) + ")";
  out += " | ";
  if (s.modes.size() == 1) return out + std::to_string(s.modes.front()) + "\n";
  out += '(';
  for (std::size_t i = 0; i < s.modes.size(); ++i) out += (i ? ", " : "") + std::to_string(s.modes[i]);
  return out + ")\n";
}

}  // namespace

std::string print_expression(const Expr& expr) { return frontend::print_expr(expr, kStyle); }

std::string print_program(const Program& program) {
  std::string out;
  if (program.name) out += "name " + program.name->name + "\n";
  if (program.version)
    out += "version " + std::to_string(program.version->major) + "." + std::to_string(program.version->minor) + "\n";
  if (program.target) {
    out += "target " + program.target->name;
    if (!program.target->options.empty()) {
      out += " (";
      for (std::size_t i = 0; i < program.target->options.size(); ++i) {
        const auto& opt = program.target->options[i];
        out += (i ? ", " : "") + opt.key + "=" + print_expression(opt.value);
      }
      out += ")";
    }
    out += "\n";
  }
  if (program.name || program.version || program.target) out += "\n";
  for (const auto& d : program.declarations) out += declaration_text(d);
  if (!program.declarations.empty() && !program.statements.empty()) out += "\n";
  for (const auto& s : program.statements) out += statement_text(s);
  return out;
}

}  // namespace qparse::blackbird
