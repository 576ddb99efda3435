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

namespace {

const frontend::ExprStyle kStyle{.pow = "^"};

std::string ref_text(const QubitRef& ref) {
  return ref.index ? ref.reg + "[" + std::to_string(*ref.index) + "]" : ref.reg;
}

std::string apply_text(const GateApply& g) {
  std::string out = g.name;
  if (!g.params.empty()) {
    out += '(';
    for (std::size_t i = 0; i < g.params.size(); ++i) {
      if (i) out += ", ";
      out += frontend::print_expr(g.params[i], kStyle);
    }
    out += ')';
  }
  for (std::size_t i = 0; i < g.targets.size(); ++i) out += (i ? ", " : " ") + ref_text(g.targets[i]);
  return out + ";";
}

std::string guarded_text(const GuardedOp& op) {
  return std::visit(overloaded{
                        [](const GateApply& g) { return apply_text(g); },
                        [](const Measure& m) { return "measure " + ref_text(m.source) + " -> " + ref_text(m.dest) + ";"; },
                        [](const Reset& r) { return "reset " + ref_text(r.target) + ";"; },
                    },
                    op);
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  return out;
}

}  // namespace

std::string print_expression(const Expr& expr) { return frontend::print_expr(expr, kStyle); }

std::string print_program(const Program& program) {
  std::string out;
  if (program.version)
    out += "OPENQASM " + std::to_string(program.version->major) + "." + std::to_string(program.version->minor) + ";\n";
  for (const auto& stmt : program.statements) {
    std::visit(overloaded{
                   [&](const RegisterDecl& d) {
                     out += (d.quantum ? "qreg " : "creg ") + d.name + "[" + std::to_string(d.size) + "];\n";
                   },
                   [&](const GateDef& d) {
                     out += "gate " + d.name;
                     if (!d.params.empty()) out += "(" + join(d.params) + ")";
                     out += " " + join(d.qargs) + " {\n";
                     for (const auto& g : d.body) out += "  " + apply_text(g) + "\n";
                     out += "}\n";
                   },
                   [&](const GateApply& g) { out += apply_text(g) + "\n"; },
                   [&](const Measure& m) { out += guarded_text(m) + "\n"; },
                   [&](const Reset& r) { out += guarded_text(r) + "\n"; },
                   [&](const Barrier& b) {
                     out += "barrier";
                     for (std::size_t i = 0; i < b.targets.size(); ++i) out += (i ? ", " : " ") + ref_text(b.targets[i]);
                     out += ";\n";
                   },
                   [&](const IfStmt& s) {
                     out += "if (" + s.creg + " == " + std::to_string(s.value) + ") " + guarded_text(s.body) + "\n";
                   },
                   [&](const Include& i) { out += "include \"" + i.path + "\";\n"; },
               },
               stmt);
  }
  return out;
}

}  // namespace qparse::qasm
