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

#include "qasm/ast.hpp"
#include "qasm/lexer.hpp"

namespace qparse::qasm {

/// Builds a Program from a token stream and checks it: gate names resolve
/// against the built-in table plus earlier `gate` definitions, gate arities
/// match, registers are declared before use and indices are in range.
///
/// Error codes: PAR101 unexpected token, PAR102 unknown gate, PAR103 arity
/// mismatch, PAR104 undeclared register/argument, PAR105 index out of range,
/// PAR106 unsupported version, PAR107 unknown identifier in an expression,
/// PAR108 quantum/classical register mismatch, PAR109 redeclaration.
Program parse_qasm(const TokenStream& tokens);

/// lex_qasm followed by parse_qasm.
Program parse_qasm_string(std::string_view source);

/// Parses the whole stream as one parameter expression. Free identifiers are
/// accepted as names.
Expr parse_qasm_expression(const TokenStream& tokens);

}  // namespace qparse::qasm
