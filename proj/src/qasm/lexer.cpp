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

#include "qasm/lexer.hpp"

#include "frontend/lexeme_table.hpp"
#include "frontend/lexer_support.hpp"

namespace qparse::qasm {

using frontend::Cursor;
using frontend::LexemeTable;

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Id: return "Id";
    case TokenKind::Int: return "Int";
    case TokenKind::Real: return "Real";
    case TokenKind::String: return "String";
    case TokenKind::Semicolon: return "Semicolon";
    case TokenKind::Comma: return "Comma";
    case TokenKind::Lbrac: return "Lbrac";
    case TokenKind::Rbrac: return "Rbrac";
    case TokenKind::Lsqbrac: return "Lsqbrac";
    case TokenKind::Rsqbrac: return "Rsqbrac";
    case TokenKind::Lcbrac: return "Lcbrac";
    case TokenKind::Rcbrac: return "Rcbrac";
    case TokenKind::Arrow: return "Arrow";
    case TokenKind::EqualsEquals: return "EqualsEquals";
    case TokenKind::Plus: return "Plus";
    case TokenKind::Minus: return "Minus";
    case TokenKind::Times: return "Times";
    case TokenKind::Divide: return "Divide";
    case TokenKind::Power: return "Power";
    case TokenKind::OpenQasm: return "OpenQasm";
    case TokenKind::Include: return "Include";
    case TokenKind::Qreg: return "Qreg";
    case TokenKind::Creg: return "Creg";
    case TokenKind::Gate: return "Gate";
    case TokenKind::Measure: return "Measure";
    case TokenKind::Reset: return "Reset";
    case TokenKind::Barrier: return "Barrier";
    case TokenKind::If: return "If";
    case TokenKind::Pi: return "Pi";
  }
  return "?";
}

namespace {

const LexemeTable<TokenKind>& symbols() {
  static const LexemeTable<TokenKind> table{
      {";", TokenKind::Semicolon}, {",", TokenKind::Comma},   {"(", TokenKind::Lbrac},
      {")", TokenKind::Rbrac},     {"[", TokenKind::Lsqbrac}, {"]", TokenKind::Rsqbrac},
      {"{", TokenKind::Lcbrac},    {"}", TokenKind::Rcbrac},  {"->", TokenKind::Arrow},
      {"==", TokenKind::EqualsEquals}, {"+", TokenKind::Plus}, {"-", TokenKind::Minus},
      {"*", TokenKind::Times},     {"/", TokenKind::Divide},  {"^", TokenKind::Power},
  };
  return table;
}

const LexemeTable<TokenKind>& keywords() {
  static const LexemeTable<TokenKind> table{
      {"OPENQASM", TokenKind::OpenQasm}, {"include", TokenKind::Include}, {"qreg", TokenKind::Qreg},
      {"creg", TokenKind::Creg},         {"gate", TokenKind::Gate},       {"measure", TokenKind::Measure},
      {"reset", TokenKind::Reset},       {"barrier", TokenKind::Barrier}, {"if", TokenKind::If},
      {"pi", TokenKind::Pi},
  };
  return table;
}

void skip_trivia(Cursor& c) {
  while (!c.at_end()) {
    const char ch = c.peek();
    if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
      c.advance();
    } else if (ch == '/' && c.peek(1) == '/') {
      while (!c.at_end() && c.peek() != '\n') c.advance();
    } else {
      return;
    }
  }
}

}  // namespace

TokenStream lex_qasm(std::string_view source) {
  Cursor cursor = Cursor::open(source);
  frontend::StreamBuilder<TokenKind> out(cursor);

  for (skip_trivia(cursor); !cursor.at_end(); skip_trivia(cursor)) {
    out.mark();
    const char ch = cursor.peek();

    if (frontend::starts_number(cursor)) {
      auto lit = frontend::scan_number(cursor, "LEX102", false);
      out.emit(lit.is_real ? TokenKind::Real : TokenKind::Int, std::move(lit.value));
    } else if (frontend::is_ident_start(ch)) {
      while (frontend::is_ident_continue(cursor.peek())) cursor.advance();
      const auto text = cursor.slice(out.marked().offset, cursor.position().offset);
      if (auto kw = keywords().find_exact(text))
        out.emit(*kw);
      else
        out.emit(TokenKind::Id);
    } else if (ch == '"') {
      cursor.advance();
      while (!cursor.at_end() && cursor.peek() != '"' && cursor.peek() != '\n') cursor.advance();
      if (cursor.peek() != '"') out.fail("LEX101", "unterminated string literal");
      cursor.advance();
      const auto text = cursor.slice(out.marked().offset + 1, cursor.position().offset - 1);
      out.emit(TokenKind::String, std::string(text));
    } else if (auto m = frontend::match_longest(cursor, symbols())) {
      cursor.advance_bytes(m->length);
      out.emit(m->kind);
    } else {
      cursor.advance();
      out.fail("LEX101", "unknown character '" +
                             std::string(cursor.slice(out.marked().offset, cursor.position().offset)) + "'");
    }
  }
  return out.finish();
}

}  // namespace qparse::qasm
