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

#include "qmasm/includes.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "frontend/diagnostic.hpp"
#include "frontend/overloaded.hpp"
#include "qmasm/parser.hpp"

namespace qparse::qmasm {

using frontend::DiagnosticError;
using frontend::Span;

namespace {

std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void respan_expr(frontend::Expr& e, const Span& span) {
  e.span = span;
  for (auto& op : e.operands) respan_expr(op, span);
}

void respan_block(Block& block, const Span& span) {
  for (auto& s : block) respan(s, span);
}

class Resolver {
 public:
  explicit Resolver(const SourceLoader& loader) : loader_(loader) {}

  Block block(const Block& in, bool top_level) {
    Block out;
    for (const auto& stmt : in) {
      if (const auto* inc = std::get_if<Include>(&stmt.node)) {
        for (auto& s : include(*inc, top_level)) out.push_back(std::move(s));
        continue;
      }
      Statement copy = stmt;
      std::visit(overloaded{
                     [&](MacroDef& m) { m.body = block(m.body, false); },
                     [&](ForLoop& f) { f.body = block(f.body, false); },
                     [&](IfElse& s) {
                       s.then_body = block(s.then_body, false);
                       if (s.else_body) s.else_body = block(*s.else_body, false);
                     },
                     [](auto&) {},
                 },
                 copy.node);
      out.push_back(std::move(copy));
    }
    return out;
  }

 private:
  Block include(const Include& inc, bool top_level) {
    if (std::find(stack_.begin(), stack_.end(), inc.path) != stack_.end())
      throw DiagnosticError("SEM302", "include cycle through '" + inc.path + "'", inc.span);
    if (static_cast<int>(stack_.size()) >= kMaxIncludeDepth)
      throw DiagnosticError("SEM302", "includes nested deeper than " + std::to_string(kMaxIncludeDepth), inc.span);
    const auto text = loader_(inc.path);
    if (!text) throw DiagnosticError("SEM301", "cannot find included file '" + inc.path + "'", inc.span);

    Program included;
    try {
      included = parse_qmasm_string(*text);
    } catch (const DiagnosticError& err) {
      const auto& d = err.diagnostic();
      throw DiagnosticError(d.code,
                            "in included file '" + inc.path + "' at " + std::to_string(d.span.start.line) + ":" +
                                std::to_string(d.span.start.column) + ": " + d.message,
                            inc.span);
    }
    if (!top_level)
      for (const auto& s : included.statements)
        if (std::holds_alternative<MacroDef>(s.node))
          throw DiagnosticError("PAR305", "included file '" + inc.path + "' defines a macro below top level",
                                inc.span);

    stack_.push_back(inc.path);
    Block out = block(included.statements, top_level);
    stack_.pop_back();
    respan_block(out, inc.span);
    return out;
  }

  const SourceLoader& loader_;
  std::vector<std::string> stack_;
};

}  // namespace

SourceLoader make_file_loader(std::vector<std::filesystem::path> directories) {
  return [dirs = std::move(directories)](std::string_view name) -> std::optional<std::string> {
    const std::filesystem::path path(name);
    if (path.is_absolute()) return read_file(path);
    for (const auto& dir : dirs)
      if (auto text = read_file(dir / path)) return text;
    return std::nullopt;
  };
}

void respan(Statement& statement, const Span& span) {
  std::visit(overloaded{
                 [&](Weight& w) { respan_expr(w.value, span); },
                 [&](Coupling& c) { respan_expr(c.value, span); },
                 [&](Pin& p) { respan_expr(p.value, span); },
                 [&](MacroDef& m) { respan_block(m.body, span); },
                 [&](UseMacro& u) {
                   for (auto& i : u.instances) i.span = span;
                 },
                 [&](Assert& a) { respan_expr(a.condition, span); },
                 [&](Let& l) { respan_expr(l.value, span); },
                 [&](ForLoop& f) {
                   respan_expr(f.lo, span);
                   respan_expr(f.hi, span);
                   if (f.step) respan_expr(*f.step, span);
                   respan_block(f.body, span);
                 },
                 [&](IfElse& s) {
                   respan_expr(s.condition, span);
                   respan_block(s.then_body, span);
                   if (s.else_body) respan_block(*s.else_body, span);
                 },
                 [](auto&) {},
             },
             statement.node);
  std::visit([&](auto& s) { s.span = span; }, statement.node);
}

Program resolve_includes(const Program& program, const SourceLoader& loader) {
  Program out;
  out.span = program.span;
  out.statements = Resolver(loader).block(program.statements, true);
  return out;
}

}  // namespace qparse::qmasm
