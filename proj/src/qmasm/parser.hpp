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

#include "qmasm/ast.hpp"
#include "qmasm/lexer.hpp"

namespace qparse::qmasm {

/// Parses a QMASM program. Each line is classified by shape: `sym value` is
/// a weight, `sym sym value` a coupling, `sym = sym`, `sym /= sym` and
/// `sym <-> sym` relations, `sym := expr` a pin; directive lines by keyword.
/// A value is a number, a `$var`, or a parenthesized expression.
///
/// Error codes: PAR301 unterminated or mismatched macro, PAR302 malformed
/// statement, PAR303 `!next.` outside a macro, PAR304 malformed range,
/// PAR305 nested macro definition, PAR306 unterminated `!for` or `!if`.
Program parse_qmasm(const TokenStream& tokens);

/// lex_qmasm followed by parse_qmasm.
Program parse_qmasm_string(std::string_view source);

/// Parses the whole stream as one expression.
///
/// Precedence, loosest first: `||`, `&&`, comparisons (`= /= < <= > >=`,
/// non-associative), `+ -`, `* / %`, unary `-`, `**` (right-associative).
Expr parse_qmasm_expression(const TokenStream& tokens);

}  // namespace qparse::qmasm
