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

#include "blackbird/ast.hpp"
#include "blackbird/lexer.hpp"

namespace qparse::blackbird {

/// Parses a Blackbird program and checks every operator application against
/// the operator table.
///
/// Error codes: PAR200 unexpected token, PAR201 unbalanced parenthesis,
/// PAR202 dangling operator, PAR203 unknown operator, PAR204 argument-count
/// mismatch, PAR205 mode-count mismatch, PAR206 malformed or misplaced
/// header, PAR207 ragged array, PAR208 repeated mode.
Program parse_blackbird(const TokenStream& tokens);

/// lex_blackbird followed by parse_blackbird.
Program parse_blackbird_string(std::string_view source);

/// Parses the whole stream as a single expression.
///
/// Precedence, loosest first: `+ -`, `* /`, unary `-`, `**`. `**` is
/// right-associative and its exponent may itself be negated (`2**-1`).
Expr parse_expression(const TokenStream& tokens);

}  // namespace qparse::blackbird
