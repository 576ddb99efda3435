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

#include "qmasm/parser.hpp"

#include <algorithm>

#include "frontend/overloaded.hpp"
#include "frontend/token_reader.hpp"

namespace qparse::qmasm {

using frontend::DiagnosticError;
using frontend::ExprKind;

std::string_view to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::Chain: return "Chain";
    case RelationKind::AntiChain: return "AntiChain";
    case RelationKind::Equiv: return "Equiv";
  }
  return "?";
}

Span Statement::span() const {
  return std::visit([](const auto& s) { return s.span; }, node);
}

namespace {

bool is_variable(const Token& t) { return t.kind == TokenKind::Id && t.lexeme.front() == '$'; }

class Parser {
 public:
  explicit Parser(const TokenStream& tokens) : r_(tokens) {}

  Program program() {
    Program prog;
    prog.span = Span{frontend::SourcePosition{}, r_.end_position()};
    prog.statements = block({}, true);
    return prog;
  }

  Expr whole_expression() {
    Expr e = expression();
    if (!r_.at_end()) r_.fail("PAR302", "unexpected " + r_.describe_current() + " after expression");
    return e;
  }

 private:
  // Parses statements until one of `terminators` starts a line (left
  // unconsumed) or input ends.
  Block block(std::initializer_list<TokenKind> terminators, bool top_level) {
    Block out;
    while (true) {
      while (r_.accept(TokenKind::Newline)) {
      }
      if (r_.at_end()) return out;
      const TokenKind kind = r_.peek()->kind;
      if (std::find(terminators.begin(), terminators.end(), kind) != terminators.end()) return out;
      out.push_back(statement(top_level));
    }
  }

  void end_of_line(std::string_view code = "PAR302") {
    if (r_.at_end() || r_.accept(TokenKind::Newline)) return;
    r_.fail(code, "unexpected " + r_.describe_current() + " at end of statement");
  }

  Span through_previous(const Span& start) const { return Span::cover(start, r_.previous().span); }

  Statement statement(bool top_level) {
    const Token& t = *r_.peek();
    switch (t.kind) {
      case TokenKind::BeginMacro: return {macro_definition(top_level)};
      case TokenKind::UseMacro: return {use_macro()};
      case TokenKind::Include: {
        r_.next();
        const Token* path = r_.accept(TokenKind::String);
        if (path == nullptr) path = r_.accept(TokenKind::Id);
        if (path == nullptr) r_.fail("PAR302", "expected a file name after '!include', found " + r_.describe_current());
        Include inc{path->kind == TokenKind::String ? std::get<std::string>(path->value) : path->lexeme,
                    Span::cover(t.span, path->span)};
        end_of_line();
        return {inc};
      }
      case TokenKind::Assert: {
        r_.next();
        Assert a{expression(), {}};
        a.span = through_previous(t.span);
        end_of_line();
        return {std::move(a)};
      }
      case TokenKind::Let: {
        r_.next();
        Let let;
        let.var = r_.expect(TokenKind::Id, "PAR302", "variable name after '!let'").lexeme;
        r_.expect(TokenKind::Assign, "PAR302", "':=' in '!let'");
        let.value = expression();
        let.span = through_previous(t.span);
        end_of_line();
        return {std::move(let)};
      }
      case TokenKind::For: return {for_loop(top_level)};
      case TokenKind::If: return {if_else()};
      case TokenKind::Id:
      case TokenKind::Next: return symbol_statement();
      case TokenKind::EndMacro:
      case TokenKind::EndFor:
      case TokenKind::Else:
      case TokenKind::EndIf:
        r_.fail("PAR302", "'" + t.lexeme + "' without a matching opening directive");
      default:
        r_.fail("PAR302", "malformed statement starting with " + r_.describe_current());
    }
  }

  MacroDef macro_definition(bool top_level) {
    const Token& begin = r_.next();
    if (!top_level || in_macro_)
      throw DiagnosticError("PAR305", "macro definitions are only allowed at top level", begin.span);
    MacroDef def;
    def.name = r_.expect(TokenKind::Id, "PAR302", "macro name after '!begin_macro'").lexeme;
    end_of_line();
    in_macro_ = true;
    def.body = block({TokenKind::EndMacro}, false);
    in_macro_ = false;
    if (r_.at_end())
      throw DiagnosticError("PAR301", "macro '" + def.name + "' is missing '!end_macro " + def.name + "'",
                            Span::cover(begin.span, r_.previous().span));
    const Token& end = r_.next();
    const Token* name = r_.accept(TokenKind::Id);
    if (name == nullptr || name->lexeme != def.name)
      throw DiagnosticError("PAR301",
                            "'!end_macro' must name the open macro '" + def.name + "'",
                            name ? Span::cover(end.span, name->span) : end.span);
    def.span = Span::cover(begin.span, name->span);
    end_of_line();
    return def;
  }

  UseMacro use_macro() {
    const Token& kw = r_.next();
    UseMacro use;
    use.macro = r_.expect(TokenKind::Id, "PAR302", "macro name after '!use_macro'").lexeme;
    while (const Token* inst = r_.accept(TokenKind::Id)) use.instances.push_back(Instance{inst->lexeme, inst->span});
    if (use.instances.empty()) r_.fail("PAR302", "'!use_macro " + use.macro + "' needs at least one instance name");
    use.span = through_previous(kw.span);
    end_of_line();
    return use;
  }

  ForLoop for_loop(bool top_level) {
    (void)top_level;
    const Token& kw = r_.next();
    ForLoop loop;
    loop.var = r_.expect(TokenKind::Id, "PAR304", "loop variable after '!for'").lexeme;
    r_.expect(TokenKind::Assign, "PAR304", "':=' after the loop variable");
    loop.lo = expression();
    r_.expect(TokenKind::DotDot, "PAR304", "'..' in range");
    loop.hi = expression();
    if (const Token* step = r_.accept(TokenKind::Id)) {
      if (step->lexeme != "step") throw DiagnosticError("PAR304", "expected 'step', found '" + step->lexeme + "'", step->span);
      loop.step = expression();
    }
    const Span head = through_previous(kw.span);
    end_of_line("PAR304");
    loop.body = block({TokenKind::EndFor}, false);
    if (r_.at_end()) throw DiagnosticError("PAR306", "'!for' without a matching '!end_for'", head);
    loop.span = Span::cover(kw.span, r_.next().span);
    end_of_line();
    return loop;
  }

  IfElse if_else() {
    const Token& kw = r_.next();
    IfElse stmt;
    stmt.condition = expression();
    const Span head = through_previous(kw.span);
    end_of_line();
    stmt.then_body = block({TokenKind::Else, TokenKind::EndIf}, false);
    if (r_.accept(TokenKind::Else)) {
      end_of_line();
      stmt.else_body = block({TokenKind::EndIf}, false);
    }
    if (r_.at_end()) throw DiagnosticError("PAR306", "'!if' without a matching '!end_if'", head);
    if (r_.check(TokenKind::Else)) r_.fail("PAR302", "second '!else' in one '!if'");
    stmt.span = Span::cover(kw.span, r_.next().span);
    end_of_line();
    return stmt;
  }

  std::string symbol() {
    if (const Token* next = r_.accept(TokenKind::Next)) {
      const Token* id = r_.peek();
      if (id == nullptr || id->kind != TokenKind::Id || id->span.start.offset != next->span.end.offset)
        throw DiagnosticError("PAR302", "'!next.' must be directly followed by a symbol", next->span);
      if (!in_macro_) throw DiagnosticError("PAR303", "'!next.' used outside a macro definition", next->span);
      r_.next();
      return next->lexeme + id->lexeme;
    }
    const Token* id = r_.peek();
    if (id == nullptr || id->kind != TokenKind::Id) r_.fail("PAR302", "expected a symbol, found " + r_.describe_current());
    if (is_variable(*id)) r_.fail("PAR302", "symbol '" + id->lexeme + "' may not start with '$'");
    r_.next();
    return id->lexeme;
  }

  bool at_value() const {
    const Token* t = r_.peek();
    return t != nullptr && (t->kind == TokenKind::Int || t->kind == TokenKind::Real ||
                            t->kind == TokenKind::Lparen || is_variable(*t));
  }

  Expr value() {
    const Token* t = r_.peek();
    if (!at_value()) r_.fail("PAR302", "expected a numeric value, found " + r_.describe_current());
    if (t->kind == TokenKind::Lparen) return primary();
    r_.next();
    if (t->kind == TokenKind::Id) return Expr::identifier(t->lexeme, t->span);
    return Expr::literal(t->kind == TokenKind::Int ? ExprKind::Int : ExprKind::Real, t->value, t->span);
  }

  Statement symbol_statement() {
    const Span start = r_.here();
    std::string a = symbol();
    const Token* t = r_.peek();
    Statement out;
    if (t != nullptr && (t->kind == TokenKind::Eq || t->kind == TokenKind::Ne || t->kind == TokenKind::Equiv)) {
      r_.next();
      const RelationKind kind = t->kind == TokenKind::Eq   ? RelationKind::Chain
                                : t->kind == TokenKind::Ne ? RelationKind::AntiChain
                                                           : RelationKind::Equiv;
      std::string b = symbol();
      out.node = Relation{kind, std::move(a), std::move(b), through_previous(start)};
    } else if (t != nullptr && t->kind == TokenKind::Assign) {
      r_.next();
      Expr v = expression();
      out.node = Pin{std::move(a), std::move(v), through_previous(start)};
    } else if (at_value()) {
      Expr v = value();
      out.node = Weight{std::move(a), std::move(v), through_previous(start)};
    } else if (t != nullptr && (t->kind == TokenKind::Id || t->kind == TokenKind::Next)) {
      std::string b = symbol();
      Expr v = value();
      out.node = Coupling{std::move(a), std::move(b), std::move(v), through_previous(start)};
    } else {
      r_.fail("PAR302", "malformed statement: expected a value, relation or ':=' after '" + a + "', found " +
                            r_.describe_current());
    }
    end_of_line();
    return out;
  }

  // ---- expressions ----

  static std::optional<ExprKind> comparison(TokenKind kind) {
    switch (kind) {
      case TokenKind::Eq: return ExprKind::Eq;
      case TokenKind::Ne: return ExprKind::Ne;
      case TokenKind::Lt: return ExprKind::Lt;
      case TokenKind::Le: return ExprKind::Le;
      case TokenKind::Gt: return ExprKind::Gt;
      case TokenKind::Ge: return ExprKind::Ge;
      default: return std::nullopt;
    }
  }

  Expr expression() {
    Expr lhs = conjunction();
    while (r_.accept(TokenKind::Or)) lhs = Expr::binary(ExprKind::Or, std::move(lhs), conjunction());
    return lhs;
  }

  Expr conjunction() {
    Expr lhs = relational();
    while (r_.accept(TokenKind::And)) lhs = Expr::binary(ExprKind::And, std::move(lhs), relational());
    return lhs;
  }

  Expr relational() {
    Expr lhs = additive();
    const Token* t = r_.peek();
    if (t == nullptr) return lhs;
    if (auto op = comparison(t->kind)) {
      r_.next();
      lhs = Expr::binary(*op, std::move(lhs), additive());
      if (r_.peek() != nullptr && comparison(r_.peek()->kind))
        r_.fail("PAR302", "comparisons do not chain; add parentheses");
    }
    return lhs;
  }

  Expr additive() {
    Expr lhs = multiplicative();
    while (r_.check(TokenKind::Plus) || r_.check(TokenKind::Minus)) {
      const ExprKind op = r_.next().kind == TokenKind::Plus ? ExprKind::Add : ExprKind::Sub;
      lhs = Expr::binary(op, std::move(lhs), multiplicative());
    }
    return lhs;
  }

  Expr multiplicative() {
    Expr lhs = unary();
    while (r_.check(TokenKind::Times) || r_.check(TokenKind::Divide) || r_.check(TokenKind::Mod)) {
      const TokenKind k = r_.next().kind;
      const ExprKind op = k == TokenKind::Times ? ExprKind::Mul : k == TokenKind::Divide ? ExprKind::Div : ExprKind::Mod;
      lhs = Expr::binary(op, std::move(lhs), unary());
    }
    return lhs;
  }

  Expr unary() {
    if (const Token* minus = r_.accept(TokenKind::Minus)) {
      Expr operand = unary();
      const Span span = Span::cover(minus->span, operand.span);
      return Expr::unary(ExprKind::Neg, std::move(operand), span);
    }
    Expr base = primary();
    if (r_.accept(TokenKind::Power)) return Expr::binary(ExprKind::Pow, std::move(base), unary());
    return base;
  }

  Expr primary() {
    const Token* t = r_.peek();
    if (t == nullptr) r_.fail("PAR302", "expected an expression, found end of input");
    switch (t->kind) {
      case TokenKind::Int: r_.next(); return Expr::literal(ExprKind::Int, t->value, t->span);
      case TokenKind::Real: r_.next(); return Expr::literal(ExprKind::Real, t->value, t->span);
      case TokenKind::Bool: r_.next(); return Expr::literal(ExprKind::Bool, t->value, t->span);
      case TokenKind::Id: r_.next(); return Expr::identifier(t->lexeme, t->span);
      case TokenKind::Lparen: {
        r_.next();
        Expr inner = expression();
        if (!r_.check(TokenKind::Rparen)) throw DiagnosticError("PAR302", "unbalanced parenthesis", t->span);
        inner.span = Span::cover(t->span, r_.next().span);
        return inner;
      }
      default: r_.fail("PAR302", "expected an expression, found " + r_.describe_current());
    }
  }

  frontend::TokenReader<TokenKind> r_;
  bool in_macro_ = false;
};

}  // namespace

Program parse_qmasm(const TokenStream& tokens) { return Parser(tokens).program(); }

Program parse_qmasm_string(std::string_view source) { return parse_qmasm(lex_qmasm(source)); }

Expr parse_qmasm_expression(const TokenStream& tokens) { return Parser(tokens).whole_expression(); }

}  // namespace qparse::qmasm
