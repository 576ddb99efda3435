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

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "frontend/source.hpp"

namespace qparse::frontend {

/// Literal payload of a token, and scalar attribute value of an AST node.
/// monostate means "no payload".
using Scalar = std::variant<std::monostate, std::int64_t, double, bool, std::string>;

template <typename Kind>
struct Token {
  Kind kind{};
  std::string lexeme;
  Span span;
  Scalar value;
  /// Whitespace and comments consumed between the previous token and this one.
  std::string leading_trivia;
};

template <typename Kind>
struct TokenStream {
  std::vector<Token<Kind>> tokens;
  std::string trailing_trivia;
  SourcePosition end;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
  const Token<Kind>& operator[](std::size_t i) const { return tokens[i]; }

  /// Interleaves trivia and lexemes; equals the lexed source byte for byte.
  std::string reconstruct() const {
    std::string out;
    for (const auto& t : tokens) {
      out += t.leading_trivia;
      out += t.lexeme;
    }
    out += trailing_trivia;
    return out;
  }
};

}  // namespace qparse::frontend
