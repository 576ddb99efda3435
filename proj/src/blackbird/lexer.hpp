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

namespace qparse::blackbird {

enum class TokenKind {
  Id,
  Int,
  Real,
  Imag,
  Bool,
  String,
  Newline,
  Lbrac,
  Rbrac,
  Lsqbrac,
  Rsqbrac,
  Comma,
  Pipe,
  Equals,
  Plus,
  Minus,
  Times,
  Divide,
  Power,
  // keywords
  Name,
  Version,
  Target,
  TypeInt,
  TypeFloat,
  TypeComplex,
  TypeBool,
  TypeStr,
  Array,
};

std::string_view to_string(TokenKind kind);

using Token = frontend::Token<TokenKind>;
using TokenStream = frontend::TokenStream<TokenKind>;

/// Tokenizes Blackbird source. The language is line oriented, so '\n' is a
/// Newline token; `#` comments, spaces, tabs and '\r' are trivia. `**` is a
/// single Power token. A trailing `j` on a number makes an Imag literal.
/// Errors: LEX000 encoding, LEX201 unknown character, LEX202 malformed number.
TokenStream lex_blackbird(std::string_view source);

}  // namespace qparse::blackbird
