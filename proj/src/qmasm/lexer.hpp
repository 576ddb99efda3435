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

#pragma once

#include <string_view>

#include "frontend/token.hpp"

namespace qparse::qmasm {

enum class TokenKind {
  Id,
  Int,
  Real,
  Bool,
  String,
  Newline,
  Lparen,
  Rparen,
  Eq,      // `=`: chain, or equality inside expressions
  Ne,      // `/=`: anti-chain, or inequality
  Equiv,   // `<->`
  Assign,  // `:=`
  Lt,
  Le,
  Gt,
  Ge,
  Plus,
  Minus,
  Times,
  Power,
  Divide,
  Mod,
  And,
  Or,
  DotDot,
  // directives
  BeginMacro,
  EndMacro,
  UseMacro,
  Include,
  Assert,
  For,
  EndFor,
  If,
  Else,
  EndIf,
  Let,
  Next,  // `!next.`, glued to the following identifier
};

std::string_view to_string(TokenKind kind);
bool is_directive(TokenKind kind);

using Token = frontend::Token<TokenKind>;
using TokenStream = frontend::TokenStream<TokenKind>;

/// Tokenizes QMASM source. Statements are line oriented: '\n' is a Newline
/// token, `#` comments and other whitespace are trivia.
///
/// Identifiers start with a letter, `_` or `$` and may contain letters,
/// digits, `_`, `$`, `.` and bracket groups such as `x[3]` or `r[7:0]`.
///
/// Outside directive lines a `-` directly followed by a digit is folded into
/// the numeric literal unless it follows a value inside parentheses, so
/// `a b -1` is three tokens while `(a -1)` is a subtraction.
///
/// Errors: LEX000 encoding, LEX301 unknown character, LEX302 unknown
/// directive, LEX303 malformed number.
TokenStream lex_qmasm(std::string_view source);

}  // namespace qparse::qmasm
