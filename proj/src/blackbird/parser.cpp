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

#include "blackbird/parser.hpp"

#include <algorithm>
#include <map>

#include "blackbird/operators.hpp"
#include "frontend/token_reader.hpp"

namespace qparse::blackbird {

using frontend::DiagnosticError;
using frontend::ExprKind;

std::string_view to_string(DeclType type) {
  switch (type) {
    case DeclType::Int: return "int";
    case DeclType::Float: return "float";
    case DeclType::Complex: return "complex";
    case DeclType::Bool: return "bool";
    case DeclType::Str: return "str";
    case DeclType::Array: return "array";
  }
  return "?";
}

namespace {

std::optional<DeclType> scalar_type(TokenKind kind) {
  switch (kind) {
    case TokenKind::TypeInt: return DeclType::Int;
    case TokenKind::TypeFloat: return DeclType::Float;
    case TokenKind::TypeComplex: return DeclType::Complex;
    case TokenKind::TypeBool: return DeclType::Bool;
    case TokenKind::TypeStr: return DeclType::Str;
    default: return std::nullopt;
  }
}

bool is_operator_token(TokenKind kind) {
  return kind == TokenKind::Plus || kind == TokenKind::Minus || kind == TokenKind::Times ||
         kind == TokenKind::Divide || kind == TokenKind::Power;
}

class Parser {
 public:
  explicit Parser(const TokenStream& tokens) : r_(tokens) {}

  Program program() {
    Program prog;
    prog.span = Span{frontend::SourcePosition{}, r_.end_position()};
    bool headers_open = true;
    while (!r_.at_end()) {
      if (r_.accept(TokenKind::Newline)) continue;
      const auto& t = *r_.peek();
      switch (t.kind) {
        case TokenKind::Name:
        case TokenKind::Version:
        case TokenKind::Target:
          if (!headers_open)
            throw DiagnosticError("PAR206", "header '" + t.lexeme + "' must precede declarations and statements",
                                  t.span);
          header(prog);
          break;
        case TokenKind::Array:
          headers_open = false;
          prog.declarations.push_back(array_declaration(std::nullopt));
          break;
        case TokenKind::Id:
          headers_open = false;
          prog.statements.push_back(mode_statement(prog));
          break;
        default:
          if (auto type = scalar_type(t.kind)) {
            headers_open = false;
            prog.declarations.push_back(declaration(*type));
            break;
          }
          r_.fail("PAR200", "unexpected " + r_.describe_current() + " at start of line");
      }
    }
    return prog;
  }

  Expr whole_expression() {
    Expr e = expression();
    if (r_.check(TokenKind::Rbrac)) r_.fail("PAR201", "unbalanced parenthesis: unmatched ')'");
    if (!r_.at_end()) r_.fail("PAR200", "unexpected " + r_.describe_current() + " after expression");
    return e;
  }

 private:
  void end_of_line() {
    if (r_.at_end() || r_.accept(TokenKind::Newline)) return;
    if (r_.check(TokenKind::Rbrac)) r_.fail("PAR201", "unbalanced parenthesis: unmatched ')'");
    r_.fail("PAR200", "expected end of line, found " + r_.describe_current());
  }

  void header(Program& prog) {
    const auto& kw = r_.next();
    const auto duplicate = [&] {
      throw DiagnosticError("PAR206", "duplicate '" + kw.lexeme + "' header", kw.span);
    };
    switch (kw.kind) {
      case TokenKind::Name: {
        if (prog.name) duplicate();
        if (!r_.check(TokenKind::Id)) r_.fail("PAR206", "expected a program name after 'name'");
        const auto& id = r_.next();
        prog.name = NameHeader{id.lexeme, Span::cover(kw.span, id.span)};
        break;
      }
      case TokenKind::Version: {
        if (prog.version) duplicate();
        const auto* num = r_.peek();
        if (num == nullptr || (num->kind != TokenKind::Real && num->kind != TokenKind::Int))
          r_.fail("PAR206", "expected a version number after 'version'");
        r_.next();
        const auto dot = num->lexeme.find('.');
        VersionHeader v;
        try {
          v.major = std::stoi(num->lexeme.substr(0, dot));
          v.minor = dot == std::string::npos || dot + 1 == num->lexeme.size() ? 0 : std::stoi(num->lexeme.substr(dot + 1));
        } catch (const std::exception&) {
          throw DiagnosticError("PAR206", "malformed version number '" + num->lexeme + "'", num->span);
        }
        if (num->lexeme.find_first_of("eE") != std::string::npos)
          throw DiagnosticError("PAR206", "malformed version number '" + num->lexeme + "'", num->span);
        v.span = Span::cover(kw.span, num->span);
        prog.version = v;
        break;
      }
      default: {
        if (prog.target) duplicate();
        if (!r_.check(TokenKind::Id)) r_.fail("PAR206", "expected a target device name after 'target'");
        const auto& id = r_.next();
        TargetHeader target;
        target.name = id.lexeme;
        target.span = Span::cover(kw.span, id.span);
        if (const auto* open = r_.accept(TokenKind::Lbrac)) {
          if (!r_.check(TokenKind::Rbrac)) {
            do {
              if (!r_.check(TokenKind::Id)) r_.fail("PAR206", "expected option name in target options");
              std::string key = r_.next().lexeme;
              if (!r_.accept(TokenKind::Equals)) r_.fail("PAR206", "expected '=' after target option '" + key + "'");
              target.options.push_back(TargetOption{std::move(key), expression()});
            } while (r_.accept(TokenKind::Comma));
          }
          if (!r_.check(TokenKind::Rbrac))
            throw DiagnosticError("PAR201", "unbalanced parenthesis in target options", open->span);
          target.span = Span::cover(kw.span, r_.next().span);
        }
        prog.target = std::move(target);
        break;
      }
    }
    end_of_line();
  }

  Declaration declaration(DeclType type) {
    const auto& kw = r_.next();
    if (r_.check(TokenKind::Array)) {
      Declaration d = array_declaration(type);
      d.span = Span::cover(kw.span, d.span);
      return d;
    }
    Declaration d;
    d.type = type;
    d.name = r_.expect(TokenKind::Id, "PAR200", "variable name").lexeme;
    r_.expect(TokenKind::Equals, "PAR200", "'='");
    d.value = expression();
    d.span = Span::cover(kw.span, d.value->span);
    end_of_line();
    return d;
  }

  // `[elem] array NAME =` followed by indented rows of comma-separated values.
  Declaration array_declaration(std::optional<DeclType> element_type) {
    const auto& kw = r_.next();
    Declaration d;
    d.type = DeclType::Array;
    d.element_type = element_type;
    d.name = r_.expect(TokenKind::Id, "PAR200", "array name").lexeme;
    const auto& eq = r_.expect(TokenKind::Equals, "PAR200", "'='");
    if (!r_.at_end()) r_.expect(TokenKind::Newline, "PAR200", "end of line before array rows");

    ArrayLiteral array;
    while (!r_.at_end() && !r_.check(TokenKind::Newline) && r_.peek()->span.start.column > 1) {
      const auto& row_start = *r_.peek();
      std::vector<Expr> row;
      do row.push_back(expression());
      while (r_.accept(TokenKind::Comma));
      if (!array.rows.empty() && row.size() != array.rows.front().size())
        throw DiagnosticError("PAR207",
                              "array '" + d.name + "' is ragged: row has " + std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(array.rows.front().size()),
                              Span::cover(row_start.span, row.back().span));
      array.span = array.rows.empty() ? Span::cover(row_start.span, row.back().span)
                                      : Span::cover(array.span, row.back().span);
      array.rows.push_back(std::move(row));
      end_of_line();
    }
    if (array.rows.empty())
      throw DiagnosticError("PAR207", "array '" + d.name + "' needs at least one indented row", eq.span);
    d.span = Span::cover(kw.span, array.span);
    d.array = std::move(array);
    arrays_[d.name] = {d.array->row_count(), d.array->column_count()};
    return d;
  }

  std::int64_t mode() {
    if (const auto* reg = r_.accept(TokenKind::Id)) {
      r_.expect(TokenKind::Lsqbrac, "PAR200", "'[' after mode register '" + reg->lexeme + "'");
      const auto& idx = r_.expect(TokenKind::Int, "PAR200", "mode index");
      r_.expect(TokenKind::Rsqbrac, "PAR200", "']'");
      return std::get<std::int64_t>(idx.value);
    }
    return std::get<std::int64_t>(r_.expect(TokenKind::Int, "PAR200", "mode number").value);
  }

  ModeStatement mode_statement(const Program& prog) {
    (void)prog;
    const auto& name = r_.next();
    ModeStatement s;
    s.op = name.lexeme;
    const auto sig = find_operator(s.op);
    if (!sig) throw DiagnosticError("PAR203", "unknown operator '" + s.op + "'", name.span);

    if (const auto* open = r_.accept(TokenKind::Lbrac)) {
      if (!r_.check(TokenKind::Rbrac)) {
        do s.args.push_back(expression());
        while (r_.accept(TokenKind::Comma));
      }
      if (!r_.accept(TokenKind::Rbrac))
        throw DiagnosticError("PAR201", "unbalanced parenthesis in arguments of '" + s.op + "'", open->span);
    }
    const Span head = Span::cover(name.span, r_.previous().span);
    if (!sig->accepts_arg_count(s.args.size())) {
      std::string expected = std::to_string(sig->min_args);
      if (sig->max_args != sig->min_args) expected += "-" + std::to_string(sig->max_args);
      throw DiagnosticError("PAR204",
                            "'" + s.op + "' takes " + expected + " argument(s), got " + std::to_string(s.args.size()),
                            head);
    }

    r_.expect(TokenKind::Pipe, "PAR200", "'|' before modes");
    if (const auto* open = r_.accept(TokenKind::Lbrac)) {
      do s.modes.push_back(mode());
      while (r_.accept(TokenKind::Comma));
      if (!r_.accept(TokenKind::Rbrac)) throw DiagnosticError("PAR201", "unbalanced parenthesis in mode list", open->span);
    } else {
      s.modes.push_back(mode());
    }
    s.span = Span::cover(name.span, r_.previous().span);

    for (std::size_t i = 0; i < s.modes.size(); ++i)
      for (std::size_t j = i + 1; j < s.modes.size(); ++j)
        if (s.modes[i] == s.modes[j])
          throw DiagnosticError("PAR208", "mode " + std::to_string(s.modes[i]) + " appears twice", s.span);

    check_modes(*sig, s);
    end_of_line();
    return s;
  }

  void check_modes(const OperatorSignature& sig, const ModeStatement& s) const {
    if (!sig.variable_modes()) {
      if (static_cast<int>(s.modes.size()) != sig.mode_count)
        throw DiagnosticError("PAR205",
                              "'" + s.op + "' acts on " + std::to_string(sig.mode_count) + " mode(s), got " +
                                  std::to_string(s.modes.size()),
                              s.span);
      return;
    }
    // Matrix operators: the argument names an array whose shape fixes the
    // mode count (n x n for Interferometer, 2n x 2n for the Gaussian ones).
    const Expr& arg = s.args.front();
    const auto it = arg.kind == ExprKind::Name ? arrays_.find(arg.name) : arrays_.end();
    if (it == arrays_.end())
      throw DiagnosticError("PAR204", "'" + s.op + "' expects the name of a declared array", arg.span);
    const auto [rows, cols] = it->second;
    if (rows != cols)
      throw DiagnosticError("PAR205", "'" + s.op + "' needs a square matrix, '" + arg.name + "' is " +
                                          std::to_string(rows) + "x" + std::to_string(cols),
                            s.span);
    const std::size_t expected = s.op == "Interferometer" ? rows : rows / 2;
    if ((s.op != "Interferometer" && rows % 2 != 0) || s.modes.size() != expected)
      throw DiagnosticError("PAR205",
                            "'" + s.op + "' with a " + std::to_string(rows) + "x" + std::to_string(cols) +
                                " matrix acts on " + std::to_string(expected) + " mode(s), got " +
                                std::to_string(s.modes.size()),
                            s.span);
  }

  Expr expression() {
    Expr lhs = term();
    while (r_.check(TokenKind::Plus) || r_.check(TokenKind::Minus)) {
      const ExprKind op = r_.next().kind == TokenKind::Plus ? ExprKind::Add : ExprKind::Sub;
      lhs = Expr::binary(op, std::move(lhs), term());
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (r_.check(TokenKind::Times) || r_.check(TokenKind::Divide)) {
      const ExprKind op = r_.next().kind == TokenKind::Times ? ExprKind::Mul : ExprKind::Div;
      lhs = Expr::binary(op, std::move(lhs), unary());
    }
    return lhs;
  }

  Expr unary() {
    if (r_.check(TokenKind::Minus)) {
      const auto& minus = r_.next();
      Expr operand = unary();
      const Span span = Span::cover(minus.span, operand.span);
      return Expr::unary(ExprKind::Neg, std::move(operand), span);
    }
    Expr base = primary();
    if (r_.accept(TokenKind::Power)) return Expr::binary(ExprKind::Pow, std::move(base), unary());
    return base;
  }

  Expr primary() {
    const auto* t = r_.peek();
    const bool after_operator = r_.index() > 0 && is_operator_token(r_.previous().kind);
    if (t == nullptr || t->kind == TokenKind::Newline || t->kind == TokenKind::Rbrac || t->kind == TokenKind::Comma ||
        t->kind == TokenKind::Pipe || is_operator_token(t->kind)) {
      if (after_operator)
        throw DiagnosticError("PAR202", "dangling operator '" + r_.previous().lexeme + "'", r_.previous().span);
      r_.fail("PAR200", "expected an expression, found " + r_.describe_current());
    }
    r_.next();
    switch (t->kind) {
      case TokenKind::Int:
        return Expr::literal(ExprKind::Int, t->value, t->span);
      case TokenKind::Real:
        return Expr::literal(ExprKind::Real, t->value, t->span);
      case TokenKind::Imag:
        return Expr::literal(ExprKind::Imag, t->value, t->span);
      case TokenKind::Bool:
        return Expr::literal(ExprKind::Bool, t->value, t->span);
      case TokenKind::String:
        return Expr::literal(ExprKind::Str, t->value, t->span);
      case TokenKind::Lbrac: {
        Expr inner = expression();
        if (!r_.check(TokenKind::Rbrac)) throw DiagnosticError("PAR201", "unbalanced parenthesis: missing ')'", t->span);
        inner.span = Span::cover(t->span, r_.next().span);
        return inner;
      }
      case TokenKind::Id: {
        if (r_.check(TokenKind::Lbrac)) {
          const auto& open = r_.next();
          Expr call;
          call.kind = ExprKind::Call;
          call.name = t->lexeme;
          if (!r_.check(TokenKind::Rbrac)) {
            do call.operands.push_back(expression());
            while (r_.accept(TokenKind::Comma));
          }
          if (!r_.check(TokenKind::Rbrac))
            throw DiagnosticError("PAR201", "unbalanced parenthesis: missing ')'", open.span);
          call.span = Span::cover(t->span, r_.next().span);
          return call;
        }
        if (r_.check(TokenKind::Lsqbrac)) {
          r_.next();
          const auto& idx = r_.expect(TokenKind::Int, "PAR200", "mode index");
          const auto& close = r_.expect(TokenKind::Rsqbrac, "PAR200", "']'");
          Expr ref = Expr::literal(ExprKind::ModeRef, idx.value, Span::cover(t->span, close.span));
          ref.name = t->lexeme;
          return ref;
        }
        return Expr::identifier(t->lexeme, t->span);
      }
      default:
        throw DiagnosticError("PAR200", "expected an expression, found '" + t->lexeme + "'", t->span);
    }
  }

  frontend::TokenReader<TokenKind> r_;
  std::map<std::string, std::pair<std::size_t, std::size_t>> arrays_;
};

}  // namespace

Program parse_blackbird(const TokenStream& tokens) { return Parser(tokens).program(); }

Program parse_blackbird_string(std::string_view source) { return parse_blackbird(lex_blackbird(source)); }

Expr parse_expression(const TokenStream& tokens) { return Parser(tokens).whole_expression(); }

}  // namespace qparse::blackbird
