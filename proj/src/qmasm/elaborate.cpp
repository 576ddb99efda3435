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

#include "qmasm/elaborate.hpp"

#include <stdexcept>

#include "frontend/diagnostic.hpp"
#include "frontend/lexer_support.hpp"
#include "frontend/overloaded.hpp"
#include "qmasm/macros.hpp"
#include "qmasm/symbol.hpp"

namespace qparse::qmasm {

using frontend::DiagnosticError;

std::string interpolate(const std::string& symbol, const Bindings& bindings, const Span& span) {
  std::string out;
  for (std::size_t i = 0; i < symbol.size();) {
    if (symbol[i] != '$') {
      out += symbol[i++];
      continue;
    }
    std::size_t j = i + 1;
    while (j < symbol.size() && frontend::is_ident_continue(symbol[j])) ++j;
    const std::string name = symbol.substr(i + 1, j - i - 1);
    const auto it = bindings.find(name);
    if (name.empty() || it == bindings.end())
      throw DiagnosticError("SEM305", "unbound variable '$" + name + "' in symbol '" + symbol + "'", span);
    const ClassicalValue& v = it->second;
    if (const auto* n = std::get_if<std::int64_t>(&v))
      out += std::to_string(*n);
    else if (const auto* iter = std::get_if<Iterator>(&v))
      out += std::to_string(iter->current());
    else
      throw DiagnosticError("SEM314", "variable '$" + name + "' holds a " + type_name(v) + "; symbols interpolate Int only",
                            span);
    i = j;
  }
  return out;
}

namespace {

class Elaborator {
 public:
  explicit Elaborator(MacroEnvironment& env) : env_(env) {}

  void block(const Block& in) {
    for (const auto& s : in) statement(s);
  }

  std::vector<ResolvedStatement> take() { return std::move(out_); }

 private:
  std::string symbol(const std::string& written, const Span& span, bool allow_register = false) {
    std::string s = interpolate(written, env_.bindings, span);
    const auto q = classify_symbol(s);
    if (!q) throw DiagnosticError("SEM314", "malformed symbol '" + s + "'", span);
    if (q->role == SymbolRole::Register && !allow_register)
      throw DiagnosticError("SEM314", "register '" + s + "' can only be pinned", span);
    return s;
  }

  double number(const Expr& e) {
    const ClassicalValue v = evaluate(e, env_.bindings);
    if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
    if (const auto* d = std::get_if<double>(&v)) return *d;
    throw DiagnosticError("SEM314", "expected a number, got " + type_name(v), e.span);
  }

  std::int64_t integer(const Expr& e) {
    const ClassicalValue v = evaluate(e, env_.bindings);
    if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
    throw DiagnosticError("SEM314", "loop bounds must be Int, got " + type_name(v), e.span);
  }

  bool boolean(const Expr& e, std::string_view what) {
    const ClassicalValue v = evaluate(e, env_.bindings);
    if (const auto* b = std::get_if<bool>(&v)) return *b;
    throw DiagnosticError("SEM306", std::string(what) + " must be Bool, got " + type_name(v), e.span);
  }

  void pin(const Pin& p) {
    const std::string s = symbol(p.symbol, p.span, true);
    const auto q = classify_symbol(s);
    if (q->role != SymbolRole::Register) {
      out_.push_back(ResolvedPin{s, boolean(p.value, "pin value"), p.span});
      return;
    }
    const ClassicalValue v = evaluate(p.value, env_.bindings);
    const auto* n = std::get_if<std::int64_t>(&v);
    if (n == nullptr) throw DiagnosticError("SEM314", "register pin needs an Int, got " + type_name(v), p.value.span);
    const std::size_t width = q->register_indices.size();
    if (*n < 0 || (width < 63 && *n >= (std::int64_t{1} << width)))
      throw DiagnosticError("SEM314", std::to_string(*n) + " does not fit in " + std::to_string(width) + " bits",
                            p.value.span);
    for (std::size_t k = 0; k < width; ++k) {
      const bool bit = (*n >> (width - 1 - k)) & 1;
      out_.push_back(ResolvedPin{q->element(q->register_indices[k]), bit, p.span});
    }
  }

  void loop(const ForLoop& f) {
    Range range{integer(f.lo), integer(f.hi), f.step ? integer(*f.step) : 1};
    if (range.step == 0) throw DiagnosticError("SEM316", "loop step must not be zero", f.step->span);
    if (range.size() > kMaxLoopIterations)
      throw DiagnosticError("SEM316", "loop runs " + std::to_string(range.size()) + " times; the limit is " +
                                          std::to_string(kMaxLoopIterations),
                            f.span);
    const std::string key = variable_key(f.var);
    const auto saved = env_.bindings.find(key);
    std::optional<ClassicalValue> previous;
    if (saved != env_.bindings.end()) previous = saved->second;
    for (std::uint64_t i = 0; i < range.size(); ++i) {
      env_.bindings[key] = Iterator{range, i};
      block(f.body);
    }
    if (previous)
      env_.bindings[key] = *previous;
    else
      env_.bindings.erase(key);
  }

  void statement(const Statement& stmt) {
    std::visit(overloaded{
                   [&](const Weight& w) {
                     std::string s = symbol(w.symbol, w.span);
                     out_.push_back(ResolvedWeight{std::move(s), number(w.value), w.span});
                   },
                   [&](const Coupling& c) {
                     std::string a = symbol(c.a, c.span);
                     std::string b = symbol(c.b, c.span);
                     out_.push_back(ResolvedCoupling{std::move(a), std::move(b), number(c.value), c.span});
                   },
                   [&](const Relation& r) {
                     std::string a = symbol(r.a, r.span);
                     std::string b = symbol(r.b, r.span);
                     out_.push_back(ResolvedRelation{r.kind, std::move(a), std::move(b), r.span});
                   },
                   [&](const Pin& p) { pin(p); },
                   [&](const Assert& a) {
                     Expr closed = substitute(a.condition, env_.bindings);
                     std::string text = print_expression(closed);
                     out_.push_back(Assertion{std::move(closed), std::move(text), a.span});
                   },
                   [&](const Let& l) { env_.bindings[variable_key(l.var)] = evaluate(l.value, env_.bindings); },
                   [&](const ForLoop& f) { loop(f); },
                   [&](const IfElse& s) {
                     if (boolean(s.condition, "'!if' condition"))
                       block(s.then_body);
                     else if (s.else_body)
                       block(*s.else_body);
                   },
                   [](const MacroDef&) { throw std::logic_error("elaborate: macro definitions must be expanded first"); },
                   [](const UseMacro&) { throw std::logic_error("elaborate: macro uses must be expanded first"); },
                   [](const Include&) { throw std::logic_error("elaborate: includes must be resolved first"); },
               },
               stmt.node);
  }

  MacroEnvironment& env_;
  std::vector<ResolvedStatement> out_;
};

}  // namespace

std::vector<ResolvedStatement> elaborate(const Block& statements, MacroEnvironment& env) {
  Elaborator e(env);
  e.block(statements);
  return e.take();
}

std::vector<ResolvedStatement> analyze(const Program& program, const SourceLoader& loader) {
  MacroEnvironment env;
  const Program resolved = resolve_includes(program, loader);
  const Block expanded = expand_macros(resolved, env.macros);
  return elaborate(expanded, env);
}

}  // namespace qparse::qmasm
