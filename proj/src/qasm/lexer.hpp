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

namespace qparse::qasm {

enum class TokenKind {
  Id,
  Int,
  Real,
  String,
  // punctuation
  Semicolon,
  Comma,
  Lbrac,
  Rbrac,
  Lsqbrac,
  Rsqbrac,
  Lcbrac,
  Rcbrac,
  Arrow,
  EqualsEquals,
  Plus,
  Minus,
  Times,
  Divide,
  Power,
  // keywords
  OpenQasm,
  Include,
  Qreg,
  Creg,
  Gate,
  Measure,
  Reset,
  Barrier,
  If,
  Pi,
};

std::string_view to_string(TokenKind kind);

using Token = frontend::Token<TokenKind>;
using TokenStream = frontend::TokenStream<TokenKind>;

/// Tokenizes QASM 2.0 source. `//` comments and whitespace are trivia.
/// Throws DiagnosticError with LEX000 (encoding), LEX101 (unknown character)
/// or LEX102 (malformed number).
TokenStream lex_qasm(std::string_view source);

}  // namespace qparse::qasm
