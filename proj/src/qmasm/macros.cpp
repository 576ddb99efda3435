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

#include "qmasm/macros.hpp"

#include <optional>

#include "frontend/diagnostic.hpp"
#include "frontend/overloaded.hpp"

namespace qparse::qmasm {

using frontend::DiagnosticError;

namespace {

constexpr std::string_view kNext = "!next.";

class Expander {
 public:
  explicit Expander(std::map<std::string, MacroDef>& macros) : macros_(macros) {}

  Block top(const Block& in) {
    Block out;
    for (const auto& stmt : in) {
      if (const auto* def = std::get_if<MacroDef>(&stmt.node)) {
        MacroDef expanded = *def;
        defining_ = def->name;
        expanded.body = block(def->body);
        defining_.clear();
        macros_[def->name] = std::move(expanded);
        continue;
      }
      append(out, stmt);
    }
    return out;
  }

 private:
  Block block(const Block& in) {
    Block out;
    for (const auto& stmt : in) append(out, stmt);
    return out;
  }

  void append(Block& out, const Statement& stmt) {
    if (const auto* use = std::get_if<UseMacro>(&stmt.node)) {
      instantiate(out, *use);
      return;
    }
    Statement copy = stmt;
    std::visit(overloaded{
                   [&](ForLoop& f) { f.body = block(f.body); },
                   [&](IfElse& s) {
                     s.then_body = block(s.then_body);
                     if (s.else_body) s.else_body = block(*s.else_body);
                   },
                   [](auto&) {},
               },
               copy.node);
    out.push_back(std::move(copy));
  }

  void instantiate(Block& out, const UseMacro& use) {
    if (use.macro == defining_)
      throw DiagnosticError("SEM313", "macro '" + use.macro + "' is used inside its own definition", use.span);
    const auto it = macros_.find(use.macro);
    if (it == macros_.end()) throw DiagnosticError("SEM304", "unknown macro '" + use.macro + "'", use.span);
    for (std::size_t k = 0; k < use.instances.size(); ++k)
      for (const auto& stmt : it->second.body)
        if (auto copy = renamed(stmt, use, k)) out.push_back(std::move(*copy));
  }

  static bool mentions_next(const std::string& symbol) { return symbol.rfind(kNext, 0) == 0; }

  // The last of several instances has no successor: statements that refer to
  // `!next.` are dropped there. With a single instance they are an error.
  static bool drop_in_last(const Statement& stmt, const UseMacro& use) {
    const bool next = std::visit(overloaded{
                                     [](const Weight& w) { return mentions_next(w.symbol); },
                                     [](const Coupling& c) { return mentions_next(c.a) || mentions_next(c.b); },
                                     [](const Relation& r) { return mentions_next(r.a) || mentions_next(r.b); },
                                     [](const Pin& p) { return mentions_next(p.symbol); },
                                     [](const auto&) { return false; },
                                 },
                                 stmt.node);
    if (next && use.instances.size() == 1)
      throw DiagnosticError("SEM303",
                            "macro '" + use.macro + "' refers to '!next.' but '" + use.instances[0].name +
                                "' is its only instance",
                            use.span);
    return next;
  }

  static std::string rename(const std::string& symbol, const UseMacro& use, std::size_t k) {
    if (mentions_next(symbol)) return use.instances[k + 1].name + "." + symbol.substr(kNext.size());
    return use.instances[k].name + "." + symbol;
  }

  static Block renamed(const Block& in, const UseMacro& use, std::size_t k) {
    Block out;
    for (const auto& s : in)
      if (auto copy = renamed(s, use, k)) out.push_back(std::move(*copy));
    return out;
  }

  static std::optional<Statement> renamed(const Statement& stmt, const UseMacro& use, std::size_t k) {
    if (k + 1 == use.instances.size() && drop_in_last(stmt, use)) return std::nullopt;
    Statement copy = stmt;
    std::visit(overloaded{
                   [&](Weight& w) { w.symbol = rename(w.symbol, use, k); },
                   [&](Coupling& c) {
                     c.a = rename(c.a, use, k);
                     c.b = rename(c.b, use, k);
                   },
                   [&](Relation& r) {
                     r.a = rename(r.a, use, k);
                     r.b = rename(r.b, use, k);
                   },
                   [&](Pin& p) { p.symbol = rename(p.symbol, use, k); },
                   [&](ForLoop& f) { f.body = renamed(f.body, use, k); },
                   [&](IfElse& s) {
                     s.then_body = renamed(s.then_body, use, k);
                     if (s.else_body) s.else_body = renamed(*s.else_body, use, k);
                   },
                   [](auto&) {},
               },
               copy.node);
    return copy;
  }

  std::map<std::string, MacroDef>& macros_;
  std::string defining_;
};

}  // namespace

Block expand_macros(const Program& program, std::map<std::string, MacroDef>& macros) {
  return Expander(macros).top(program.statements);
}

Block expand_macros(const Program& program) {
  std::map<std::string, MacroDef> macros;
  return expand_macros(program, macros);
}

}  // namespace qparse::qmasm
