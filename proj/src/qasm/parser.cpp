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

#include "qasm/parser.hpp"

#include <algorithm>
#include <map>

#include "frontend/token_reader.hpp"
#include "qasm/gates.hpp"

namespace qparse::qasm {

using frontend::DiagnosticError;
using frontend::ExprKind;

namespace {

constexpr std::string_view kFunctions[] = {"sin", "cos", "tan", "exp", "ln", "sqrt"};

struct Arity {
  std::size_t params;
  std::size_t qubits;
};

class Parser {
 public:
  explicit Parser(const TokenStream& tokens) : r_(tokens) {}

  Program program() {
    Program prog;
    prog.span = Span{frontend::SourcePosition{}, r_.end_position()};
    if (r_.check(TokenKind::OpenQasm)) prog.version = version();
    while (!r_.at_end()) prog.statements.push_back(statement());
    return prog;
  }

  Expr whole_expression() {
    free_names_ = true;
    Expr e = expression();
    if (!r_.at_end()) r_.fail("PAR101", "unexpected " + r_.describe_current() + " after expression");
    return e;
  }

 private:
  Version version() {
    const auto& kw = r_.next();
    Version v;
    const auto* num = r_.peek();
    if (num == nullptr || (num->kind != TokenKind::Real && num->kind != TokenKind::Int))
      r_.fail("PAR101", "expected version number after OPENQASM, found " + r_.describe_current());
    r_.next();
    const auto dot = num->lexeme.find('.');
    const std::string major = num->lexeme.substr(0, dot);
    const std::string minor = dot == std::string::npos ? "0" : num->lexeme.substr(dot + 1);
    if (major != "2" || (minor != "0" && minor != ""))
      throw DiagnosticError("PAR106", "unsupported OPENQASM version " + num->lexeme + " (only 2.0 is accepted)",
                            num->span);
    const auto& semi = r_.expect(TokenKind::Semicolon, "PAR101", "';'");
    v.span = Span::cover(kw.span, semi.span);
    return v;
  }

  Statement statement() {
    const auto* t = r_.peek();
    switch (t->kind) {
      case TokenKind::Qreg:
      case TokenKind::Creg:
        return register_decl();
      case TokenKind::Gate:
        return gate_def();
      case TokenKind::Measure:
        return measure();
      case TokenKind::Reset:
        return reset();
      case TokenKind::Barrier:
        return barrier();
      case TokenKind::If:
        return if_stmt();
      case TokenKind::Include:
        return include();
      case TokenKind::Id:
        return gate_apply();
      case TokenKind::OpenQasm:
        r_.fail("PAR101", "the OPENQASM header must be the first statement");
      default:
        r_.fail("PAR101", "unexpected " + r_.describe_current() + " at start of statement");
    }
  }

  RegisterDecl register_decl() {
    const auto& kw = r_.next();
    RegisterDecl decl;
    decl.quantum = kw.kind == TokenKind::Qreg;
    const auto& name = r_.expect(TokenKind::Id, "PAR101", "register name");
    decl.name = name.lexeme;
    r_.expect(TokenKind::Lsqbrac, "PAR101", "'['");
    const auto& size = r_.expect(TokenKind::Int, "PAR101", "register size");
    decl.size = std::get<std::int64_t>(size.value);
    if (decl.size <= 0) throw DiagnosticError("PAR105", "register size must be positive", size.span);
    r_.expect(TokenKind::Rsqbrac, "PAR101", "']'");
    const auto& semi = r_.expect(TokenKind::Semicolon, "PAR101", "';'");
    if (registers_.contains(decl.name))
      throw DiagnosticError("PAR109", "register '" + decl.name + "' is already declared", name.span);
    decl.span = Span::cover(kw.span, semi.span);
    registers_[decl.name] = decl;
    return decl;
  }

  std::vector<std::string> id_list(std::string_view what) {
    std::vector<std::string> names;
    do {
      const auto& id = r_.expect(TokenKind::Id, "PAR101", what);
      if (std::find(names.begin(), names.end(), id.lexeme) != names.end())
        throw DiagnosticError("PAR109", "duplicate name '" + id.lexeme + "'", id.span);
      names.push_back(id.lexeme);
    } while (r_.accept(TokenKind::Comma));
    return names;
  }

  GateDef gate_def() {
    const auto& kw = r_.next();
    GateDef def;
    const auto& name = r_.expect(TokenKind::Id, "PAR101", "gate name");
    def.name = name.lexeme;
    if (find_builtin_gate(def.name) || custom_.contains(def.name))
      throw DiagnosticError("PAR109", "gate '" + def.name + "' is already defined", name.span);
    if (r_.accept(TokenKind::Lbrac)) {
      if (!r_.check(TokenKind::Rbrac)) def.params = id_list("parameter name");
      r_.expect(TokenKind::Rbrac, "PAR101", "')'");
    }
    def.qargs = id_list("qubit argument name");
    for (const auto& q : def.qargs)
      if (std::find(def.params.begin(), def.params.end(), q) != def.params.end())
        r_.fail("PAR109", "'" + q + "' is both a parameter and a qubit argument");
    r_.expect(TokenKind::Lcbrac, "PAR101", "'{'");
    gate_params_ = &def.params;
    gate_qargs_ = &def.qargs;
    while (!r_.check(TokenKind::Rcbrac)) {
      if (r_.at_end()) r_.fail("PAR101", "unterminated gate body for '" + def.name + "'");
      if (!r_.check(TokenKind::Id)) r_.fail("PAR101", "expected a gate application in gate body, found " + r_.describe_current());
      def.body.push_back(gate_apply());
    }
    gate_params_ = nullptr;
    gate_qargs_ = nullptr;
    const auto& close = r_.next();
    def.span = Span::cover(kw.span, close.span);
    custom_[def.name] = Arity{def.params.size(), def.qargs.size()};
    return def;
  }

  GateApply gate_apply() {
    const auto& name = r_.expect(TokenKind::Id, "PAR101", "gate name");
    GateApply app;
    app.name = name.lexeme;
    Arity arity{};
    if (auto builtin = find_builtin_gate(app.name)) {
      arity = Arity{static_cast<std::size_t>(builtin->param_count), static_cast<std::size_t>(builtin->qubit_count)};
    } else if (auto it = custom_.find(app.name); it != custom_.end()) {
      arity = it->second;
    } else {
      throw DiagnosticError("PAR102", "unknown gate '" + app.name + "'", name.span);
    }
    if (r_.accept(TokenKind::Lbrac)) {
      if (!r_.check(TokenKind::Rbrac)) {
        do app.params.push_back(expression());
        while (r_.accept(TokenKind::Comma));
      }
      r_.expect(TokenKind::Rbrac, "PAR101", "')'");
    }
    if (!r_.check(TokenKind::Semicolon)) {
      do app.targets.push_back(qubit_operand());
      while (r_.accept(TokenKind::Comma));
    }
    const auto& semi = r_.expect(TokenKind::Semicolon, "PAR101", "';'");
    app.span = Span::cover(name.span, semi.span);
    if (app.params.size() != arity.params || app.targets.size() != arity.qubits)
      throw DiagnosticError("PAR103",
                            "gate '" + app.name + "' takes " + std::to_string(arity.params) + " parameter(s) and " +
                                std::to_string(arity.qubits) + " qubit(s), got " + std::to_string(app.params.size()) +
                                " and " + std::to_string(app.targets.size()),
                            app.span);
    return app;
  }

  // A gate target: an indexed quantum register, or a qubit argument inside a
  // gate body.
  QubitRef qubit_operand() {
    if (gate_qargs_ != nullptr) {
      const auto& id = r_.expect(TokenKind::Id, "PAR101", "qubit argument");
      if (std::find(gate_qargs_->begin(), gate_qargs_->end(), id.lexeme) == gate_qargs_->end())
        throw DiagnosticError("PAR104", "'" + id.lexeme + "' is not a qubit argument of this gate", id.span);
      if (r_.check(TokenKind::Lsqbrac)) r_.fail("PAR101", "qubit arguments cannot be indexed inside a gate body");
      return QubitRef{id.lexeme, std::nullopt, id.span};
    }
    return register_ref(true, false);
  }

  QubitRef register_ref(bool quantum, bool allow_whole) {
    const auto& id = r_.expect(TokenKind::Id, "PAR101", quantum ? "quantum register" : "classical register");
    const auto it = registers_.find(id.lexeme);
    if (it == registers_.end())
      throw DiagnosticError("PAR104", "undeclared register '" + id.lexeme + "'", id.span);
    if (it->second.quantum != quantum)
      throw DiagnosticError("PAR108",
                            "'" + id.lexeme + "' is a " + (quantum ? "classical" : "quantum") + " register; expected a " +
                                (quantum ? "quantum" : "classical") + " register",
                            id.span);
    QubitRef ref{id.lexeme, std::nullopt, id.span};
    if (!r_.accept(TokenKind::Lsqbrac)) {
      if (!allow_whole)
        throw DiagnosticError("PAR101", "whole-register operands are not supported; index '" + id.lexeme + "'",
                              id.span);
      return ref;
    }
    const auto& index = r_.expect(TokenKind::Int, "PAR101", "register index");
    const auto& close = r_.expect(TokenKind::Rsqbrac, "PAR101", "']'");
    ref.index = std::get<std::int64_t>(index.value);
    ref.span = Span::cover(id.span, close.span);
    if (*ref.index >= it->second.size)
      throw DiagnosticError("PAR105",
                            "index " + std::to_string(*ref.index) + " is out of range for register '" + id.lexeme +
                                "' of size " + std::to_string(it->second.size),
                            index.span);
    return ref;
  }

  Measure measure() {
    const auto& kw = r_.next();
    Measure m;
    m.source = register_ref(true, true);
    r_.expect(TokenKind::Arrow, "PAR101", "'->'");
    m.dest = register_ref(false, true);
    const auto& semi = r_.expect(TokenKind::Semicolon, "PAR101", "';'");
    m.span = Span::cover(kw.span, semi.span);
    // Whole registers measure element-wise and must match in size.
    if (m.source.index.has_value() != m.dest.index.has_value())
      throw DiagnosticError("PAR101", "measure needs two indexed operands or two whole registers", m.span);
    if (!m.source.index && registers_.at(m.source.reg).size != registers_.at(m.dest.reg).size)
      throw DiagnosticError("PAR105",
                            "registers '" + m.source.reg + "' and '" + m.dest.reg + "' differ in size", m.span);
    return m;
  }

  Reset reset() {
    const auto& kw = r_.next();
    Reset rs;
    // Parsed like a gate application so wrong arities report PAR103.
    std::size_t params = 0;
    if (r_.accept(TokenKind::Lbrac)) {
      if (!r_.check(TokenKind::Rbrac)) {
        do {
          expression();
          ++params;
        } while (r_.accept(TokenKind::Comma));
      }
      r_.expect(TokenKind::Rbrac, "PAR101", "')'");
    }
    std::vector<QubitRef> targets;
    if (!r_.check(TokenKind::Semicolon)) {
      do targets.push_back(register_ref(true, true));
      while (r_.accept(TokenKind::Comma));
    }
    const auto& semi = r_.expect(TokenKind::Semicolon, "PAR101", "';'");
    rs.span = Span::cover(kw.span, semi.span);
    if (params != 0 || targets.size() != 1)
      throw DiagnosticError("PAR103",
                            "gate 'reset' takes 0 parameter(s) and 1 qubit(s), got " + std::to_string(params) +
                                " and " + std::to_string(targets.size()),
                            rs.span);
    rs.target = targets.front();
    return rs;
  }

  Barrier barrier() {
    const auto& kw = r_.next();
    Barrier b;
    do b.targets.push_back(register_ref(true, true));
    while (r_.accept(TokenKind::Comma));
    const auto& semi = r_.expect(TokenKind::Semicolon, "PAR101", "';'");
    b.span = Span::cover(kw.span, semi.span);
    return b;
  }

  IfStmt if_stmt() {
    const auto& kw = r_.next();
    IfStmt s;
    r_.expect(TokenKind::Lbrac, "PAR101", "'('");
    const QubitRef creg = register_ref(false, true);
    if (creg.index) throw DiagnosticError("PAR101", "if compares a whole classical register", creg.span);
    s.creg = creg.reg;
    r_.expect(TokenKind::EqualsEquals, "PAR101", "'=='");
    s.value = std::get<std::int64_t>(r_.expect(TokenKind::Int, "PAR101", "integer").value);
    r_.expect(TokenKind::Rbrac, "PAR101", "')'");
    Span body_span;
    if (r_.check(TokenKind::Measure)) {
      Measure m = measure();
      body_span = m.span;
      s.body = std::move(m);
    } else if (r_.check(TokenKind::Reset)) {
      Reset rs = reset();
      body_span = rs.span;
      s.body = std::move(rs);
    } else if (r_.check(TokenKind::Id)) {
      GateApply g = gate_apply();
      body_span = g.span;
      s.body = std::move(g);
    } else {
      r_.fail("PAR101", "expected a gate, measure or reset after if, found " + r_.describe_current());
    }
    s.span = Span::cover(kw.span, body_span);
    return s;
  }

  Include include() {
    const auto& kw = r_.next();
    const auto& path = r_.expect(TokenKind::String, "PAR101", "include path string");
    const auto& semi = r_.expect(TokenKind::Semicolon, "PAR101", "';'");
    return Include{std::get<std::string>(path.value), Span::cover(kw.span, semi.span)};
  }

  // expression := term (('+' | '-') term)*
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
    if (r_.at_end()) r_.fail("PAR101", "expected an expression, found end of input");
    const auto& t = r_.next();
    switch (t.kind) {
      case TokenKind::Int:
        return Expr::literal(ExprKind::Int, t.value, t.span);
      case TokenKind::Real:
        return Expr::literal(ExprKind::Real, t.value, t.span);
      case TokenKind::Pi:
        return Expr::identifier("pi", t.span);
      case TokenKind::Lbrac: {
        Expr inner = expression();
        const auto& close = r_.expect(TokenKind::Rbrac, "PAR101", "')'");
        inner.span = Span::cover(t.span, close.span);
        return inner;
      }
      case TokenKind::Id: {
        if (r_.check(TokenKind::Lbrac)) {
          if (std::find(std::begin(kFunctions), std::end(kFunctions), t.lexeme) == std::end(kFunctions))
            throw DiagnosticError("PAR107", "unknown function '" + t.lexeme + "'", t.span);
          r_.next();
          Expr call;
          call.kind = ExprKind::Call;
          call.name = t.lexeme;
          call.operands.push_back(expression());
          const auto& close = r_.expect(TokenKind::Rbrac, "PAR101", "')'");
          call.span = Span::cover(t.span, close.span);
          return call;
        }
        const bool known = free_names_ || (gate_params_ != nullptr &&
                                           std::find(gate_params_->begin(), gate_params_->end(), t.lexeme) !=
                                               gate_params_->end());
        if (!known) throw DiagnosticError("PAR107", "unknown identifier '" + t.lexeme + "' in expression", t.span);
        return Expr::identifier(t.lexeme, t.span);
      }
      default:
        throw DiagnosticError("PAR101", "expected an expression, found '" + t.lexeme + "'", t.span);
    }
  }

  frontend::TokenReader<TokenKind> r_;
  std::map<std::string, RegisterDecl> registers_;
  std::map<std::string, Arity> custom_;
  const std::vector<std::string>* gate_params_ = nullptr;
  const std::vector<std::string>* gate_qargs_ = nullptr;
  bool free_names_ = false;
};

}  // namespace

Program parse_qasm(const TokenStream& tokens) { return Parser(tokens).program(); }

Program parse_qasm_string(std::string_view source) { return parse_qasm(lex_qasm(source)); }

Expr parse_qasm_expression(const TokenStream& tokens) { return Parser(tokens).whole_expression(); }

}  // namespace qparse::qasm
