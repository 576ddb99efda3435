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

#include "qmasm/lexer.hpp"

#include "frontend/lexeme_table.hpp"
#include "frontend/lexer_support.hpp"

namespace qparse::qmasm {

using frontend::Cursor;
using frontend::LexemeTable;

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Id: return "Id";
    case TokenKind::Int: return "Int";
    case TokenKind::Real: return "Real";
    case TokenKind::Bool: return "Bool";
    case TokenKind::String: return "String";
    case TokenKind::Newline: return "Newline";
    case TokenKind::Lparen: return "Lparen";
    case TokenKind::Rparen: return "Rparen";
    case TokenKind::Eq: return "Eq";
    case TokenKind::Ne: return "Ne";
    case TokenKind::Equiv: return "Equiv";
    case TokenKind::Assign: return "Assign";
    case TokenKind::Lt: return "Lt";
    case TokenKind::Le: return "Le";
    case TokenKind::Gt: return "Gt";
    case TokenKind::Ge: return "Ge";
    case TokenKind::Plus: return "Plus";
    case TokenKind::Minus: return "Minus";
    case TokenKind::Times: return "Times";
    case TokenKind::Power: return "Power";
    case TokenKind::Divide: return "Divide";
    case TokenKind::Mod: return "Mod";
    case TokenKind::And: return "And";
    case TokenKind::Or: return "Or";
    case TokenKind::DotDot: return "DotDot";
    case TokenKind::BeginMacro: return "BeginMacro";
    case TokenKind::EndMacro: return "EndMacro";
    case TokenKind::UseMacro: return "UseMacro";
    case TokenKind::Include: return "Include";
    case TokenKind::Assert: return "Assert";
    case TokenKind::For: return "For";
    case TokenKind::EndFor: return "EndFor";
    case TokenKind::If: return "If";
    case TokenKind::Else: return "Else";
    case TokenKind::EndIf: return "EndIf";
    case TokenKind::Let: return "Let";
    case TokenKind::Next: return "Next";
  }
  return "?";
}

bool is_directive(TokenKind kind) { return kind >= TokenKind::BeginMacro && kind != TokenKind::Next; }

namespace {

const LexemeTable<TokenKind>& symbols() {
  static const LexemeTable<TokenKind> table{
      {"(", TokenKind::Lparen}, {")", TokenKind::Rparen}, {"=", TokenKind::Eq},     {"/=", TokenKind::Ne},
      {"<->", TokenKind::Equiv}, {":=", TokenKind::Assign}, {"<", TokenKind::Lt},  {"<=", TokenKind::Le},
      {">", TokenKind::Gt},     {">=", TokenKind::Ge},     {"+", TokenKind::Plus},  {"-", TokenKind::Minus},
      {"*", TokenKind::Times},  {"**", TokenKind::Power},  {"/", TokenKind::Divide}, {"%", TokenKind::Mod},
      {"&&", TokenKind::And},   {"||", TokenKind::Or},     {"..", TokenKind::DotDot}, {"\n", TokenKind::Newline},
  };
  return table;
}

const LexemeTable<TokenKind>& directives() {
  static const LexemeTable<TokenKind> table{
      {"!begin_macro", TokenKind::BeginMacro}, {"!end_macro", TokenKind::EndMacro},
      {"!use_macro", TokenKind::UseMacro},     {"!include", TokenKind::Include},
      {"!assert", TokenKind::Assert},          {"!for", TokenKind::For},
      {"!end_for", TokenKind::EndFor},         {"!if", TokenKind::If},
      {"!else", TokenKind::Else},              {"!end_if", TokenKind::EndIf},
      {"!let", TokenKind::Let},                {"!next.", TokenKind::Next},
  };
  return table;
}

bool is_symbol_start(char c) { return frontend::is_ident_start(c) || c == '$'; }
bool is_symbol_continue(char c) { return frontend::is_ident_continue(c) || c == '$'; }
bool is_index_char(char c) { return frontend::is_ident_continue(c) || c == '$' || c == ':'; }

bool ends_value(TokenKind kind) {
  return kind == TokenKind::Id || kind == TokenKind::Int || kind == TokenKind::Real || kind == TokenKind::Bool ||
         kind == TokenKind::Rparen;
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

class Lexer {
 public:
  explicit Lexer(std::string_view source) : cursor_(Cursor::open(source)), out_(cursor_) {}

  TokenStream run() {
    for (skip_trivia(cursor_); !cursor_.at_end(); skip_trivia(cursor_)) {
      out_.mark();
      token();
    }
    return out_.finish();
  }

 private:
  void token() {
    const char ch = cursor_.peek();
    if (ch == '\n') {
      cursor_.advance();
      emit(TokenKind::Newline);
      return;
    }
    if (ch == '!') return directive();
    if (frontend::starts_number(cursor_)) return number(false);
    if (ch == '-' && frontend::starts_number(cursor_, 1) && folds_sign()) {
      cursor_.advance();
      return number(true);
    }
    if (is_symbol_start(ch)) return symbol();
    if (ch == '"') return string();
    if (auto m = frontend::match_longest(cursor_, symbols())) {
      cursor_.advance_bytes(m->length);
      if (m->kind == TokenKind::Lparen) ++depth_;
      if (m->kind == TokenKind::Rparen && depth_ > 0) --depth_;
      emit(m->kind);
      return;
    }
    cursor_.advance();
    out_.fail("LEX301", "unknown character '" + text() + "'");
  }

  bool folds_sign() const {
    if (directive_line_) return false;
    if (depth_ == 0 || out_.tokens().empty()) return true;
    return !ends_value(out_.tokens().back().kind);
  }

  void number(bool negative) {
    auto lit = frontend::scan_number(cursor_, "LEX303", false, negative);
    emit(lit.is_real ? TokenKind::Real : TokenKind::Int, std::move(lit.value));
  }

  void directive() {
    cursor_.advance();
    while (frontend::is_ident_continue(cursor_.peek())) cursor_.advance();
    if (text() == "!next") {
      if (cursor_.peek() != '.') out_.fail("LEX302", "'!next' must be followed by '.' and a symbol");
      cursor_.advance();
    }
    const auto kind = directives().find_exact(text());
    if (!kind) out_.fail("LEX302", "unknown directive '" + text() + "'");
    emit(*kind);
  }

  void symbol() {
    while (true) {
      const char c = cursor_.peek();
      if (is_symbol_continue(c)) {
        cursor_.advance();
      } else if (c == '.' && cursor_.peek(1) != '.') {
        cursor_.advance();
      } else if (c == '[') {
        cursor_.advance();
        while (is_index_char(cursor_.peek())) cursor_.advance();
        if (cursor_.peek() != ']') out_.fail("LEX301", "unterminated index in symbol '" + text() + "'");
        cursor_.advance();
      } else {
        break;
      }
    }
    const std::string t = text();
    if (t == "true" || t == "false")
      emit(TokenKind::Bool, t == "true");
    else
      emit(TokenKind::Id);
  }

  void string() {
    cursor_.advance();
    while (!cursor_.at_end() && cursor_.peek() != '"' && cursor_.peek() != '\n') cursor_.advance();
    if (cursor_.peek() != '"') out_.fail("LEX301", "unterminated string literal");
    cursor_.advance();
    const std::string t = text();
    emit(TokenKind::String, t.substr(1, t.size() - 2));
  }

  std::string text() const { return std::string(cursor_.slice(out_.marked().offset, cursor_.position().offset)); }

  void emit(TokenKind kind, frontend::Scalar value = {}) {
    const bool line_start = out_.tokens().empty() || out_.tokens().back().kind == TokenKind::Newline;
    out_.emit(kind, std::move(value));
    if (kind == TokenKind::Newline) {
      directive_line_ = false;
      depth_ = 0;
    } else if (line_start) {
      directive_line_ = is_directive(kind);
    }
  }

  Cursor cursor_;
  frontend::StreamBuilder<TokenKind> out_;
  bool directive_line_ = false;
  int depth_ = 0;
};

}  // namespace

TokenStream lex_qmasm(std::string_view source) { return Lexer(source).run(); }

}  // namespace qparse::qmasm
