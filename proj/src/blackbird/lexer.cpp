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

#include "blackbird/lexer.hpp"

#include "frontend/lexeme_table.hpp"
#include "frontend/lexer_support.hpp"

namespace qparse::blackbird {

using frontend::Cursor;
using frontend::LexemeTable;

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Id: return "Id";
    case TokenKind::Int: return "Int";
    case TokenKind::Real: return "Real";
    case TokenKind::Imag: return "Imag";
    case TokenKind::Bool: return "Bool";
    case TokenKind::String: return "String";
    case TokenKind::Newline: return "Newline";
    case TokenKind::Lbrac: return "Lbrac";
    case TokenKind::Rbrac: return "Rbrac";
    case TokenKind::Lsqbrac: return "Lsqbrac";
    case TokenKind::Rsqbrac: return "Rsqbrac";
    case TokenKind::Comma: return "Comma";
    case TokenKind::Pipe: return "Pipe";
    case TokenKind::Equals: return "Equals";
    case TokenKind::Plus: return "Plus";
    case TokenKind::Minus: return "Minus";
    case TokenKind::Times: return "Times";
    case TokenKind::Divide: return "Divide";
    case TokenKind::Power: return "Power";
    case TokenKind::Name: return "Name";
    case TokenKind::Version: return "Version";
    case TokenKind::Target: return "Target";
    case TokenKind::TypeInt: return "TypeInt";
    case TokenKind::TypeFloat: return "TypeFloat";
    case TokenKind::TypeComplex: return "TypeComplex";
    case TokenKind::TypeBool: return "TypeBool";
    case TokenKind::TypeStr: return "TypeStr";
    case TokenKind::Array: return "Array";
  }
  return "?";
}

namespace {

const LexemeTable<TokenKind>& symbols() {
  static const LexemeTable<TokenKind> table{
      {"(", TokenKind::Lbrac},  {")", TokenKind::Rbrac},  {"[", TokenKind::Lsqbrac}, {"]", TokenKind::Rsqbrac},
      {",", TokenKind::Comma},  {"|", TokenKind::Pipe},   {"=", TokenKind::Equals},  {"+", TokenKind::Plus},
      {"-", TokenKind::Minus},  {"*", TokenKind::Times},  {"**", TokenKind::Power},  {"/", TokenKind::Divide},
      {"\n", TokenKind::Newline},
  };
  return table;
}

const LexemeTable<TokenKind>& keywords() {
  static const LexemeTable<TokenKind> table{
      {"name", TokenKind::Name},         {"version", TokenKind::Version}, {"target", TokenKind::Target},
      {"int", TokenKind::TypeInt},       {"float", TokenKind::TypeFloat}, {"complex", TokenKind::TypeComplex},
      {"bool", TokenKind::TypeBool},     {"str", TokenKind::TypeStr},     {"array", TokenKind::Array},
      {"True", TokenKind::Bool},         {"False", TokenKind::Bool},      {"true", TokenKind::Bool},
      {"false", TokenKind::Bool},
  };
  return table;
}

void skip_trivia(Cursor& c) {
  while (!c.at_end()) {
    const char ch = c.peek();
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      c.advance();
    } else if (ch == '#') {
      while (!c.at_end() && c.peek() != '\n') c.advance();
    } else {
      return;
    }
  }
}

}  // namespace

TokenStream lex_blackbird(std::string_view source) {
  Cursor cursor = Cursor::open(source);
  frontend::StreamBuilder<TokenKind> out(cursor);

  for (skip_trivia(cursor); !cursor.at_end(); skip_trivia(cursor)) {
    out.mark();
    const char ch = cursor.peek();

    if (frontend::starts_number(cursor)) {
      auto lit = frontend::scan_number(cursor, "LEX202", true);
      if (lit.imaginary) {
        if (const auto* i = std::get_if<std::int64_t>(&lit.value)) lit.value = static_cast<double>(*i);
        out.emit(TokenKind::Imag, std::move(lit.value));
      } else {
        out.emit(lit.is_real ? TokenKind::Real : TokenKind::Int, std::move(lit.value));
      }
    } else if (frontend::is_ident_start(ch)) {
      while (frontend::is_ident_continue(cursor.peek())) cursor.advance();
      const auto text = cursor.slice(out.marked().offset, cursor.position().offset);
      if (auto kw = keywords().find_exact(text)) {
        if (*kw == TokenKind::Bool)
          out.emit(*kw, text == "True" || text == "true");
        else
          out.emit(*kw);
      } else {
        out.emit(TokenKind::Id);
      }
    } else if (ch == '"') {
      cursor.advance();
      while (!cursor.at_end() && cursor.peek() != '"' && cursor.peek() != '\n') cursor.advance();
      if (cursor.peek() != '"') out.fail("LEX201", "unterminated string literal");
      cursor.advance();
      out.emit(TokenKind::String, std::string(cursor.slice(out.marked().offset + 1, cursor.position().offset - 1)));
    } else if (auto m = frontend::match_longest(cursor, symbols())) {
      cursor.advance_bytes(m->length);
      out.emit(m->kind);
    } else {
      cursor.advance();
      out.fail("LEX201", "unknown character '" +
                             std::string(cursor.slice(out.marked().offset, cursor.position().offset)) + "'");
    }
  }
  return out.finish();
}

}  // namespace qparse::blackbird
