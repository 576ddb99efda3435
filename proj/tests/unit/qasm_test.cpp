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

#include <string>
#include <variant>

#include "corpus.hpp"
#include "doctest.h"
#include "frontend/diagnostic.hpp"
#include "qasm/ast.hpp"
#include "qasm/gates.hpp"
#include "qasm/lexer.hpp"
#include "qasm/parser.hpp"

using namespace qparse;
using namespace qparse::qasm;

namespace {

std::string code_of(std::string_view source) {
  try {
    parse_qasm_string(source);
  } catch (const frontend::DiagnosticError& e) {
    return e.diagnostic().code;
  }
  return "ok";
}

}  // namespace

TEST_CASE("lex_qasm token kinds") {
  const auto ts = lex_qasm("x q[0];");
  REQUIRE(ts.size() == 6);
  const TokenKind want[] = {TokenKind::Id, TokenKind::Id, TokenKind::Lsqbrac,
                            TokenKind::Int, TokenKind::Rsqbrac, TokenKind::Semicolon};
  for (std::size_t i = 0; i < 6; ++i) CHECK(ts[i].kind == want[i]);
  CHECK(std::get<std::int64_t>(ts[3].value) == 0);
}

TEST_CASE("lex_qasm two-character lookahead") {
  const auto ts = lex_qasm("measure q[0] -> c[0];");
  int arrows = 0;
  for (const auto& t : ts.tokens) arrows += t.kind == TokenKind::Arrow;
  CHECK(arrows == 1);
  CHECK(lex_qasm("c==1")[1].kind == TokenKind::EqualsEquals);
}

TEST_CASE("lex_qasm keywords and comments") {
  const auto ts = lex_qasm("OPENQASM 2.0; // hi\nqreg q[1];");
  CHECK(ts[0].kind == TokenKind::OpenQasm);
  CHECK(ts[1].kind == TokenKind::Real);
  CHECK(ts[3].kind == TokenKind::Qreg);
  CHECK(ts[3].leading_trivia == " // hi\n");
  CHECK(ts.reconstruct() == "OPENQASM 2.0; // hi\nqreg q[1];");
}

TEST_CASE("lex_qasm unknown character") {
  try {
    lex_qasm("q@");
    FAIL("no error");
  } catch (const frontend::DiagnosticError& e) {
    CHECK(e.diagnostic().code == "LEX101");
    CHECK(e.diagnostic().span.start.column == 2);
  }
}

TEST_CASE("built-in gate table") {
  CHECK(builtin_gates().size() == 19);
  CHECK(find_builtin_gate("u3")->param_count == 3);
  CHECK(find_builtin_gate("cu1")->qubit_count == 2);
  CHECK(find_builtin_gate("ccz")->qubit_count == 3);
  CHECK_FALSE(find_builtin_gate("swap"));
}

TEST_CASE("parse_qasm statements") {
  const auto p = parse_qasm_string("qreg q[2]; cx q[0], q[1];");
  REQUIRE(p.statements.size() == 2);
  CHECK(std::holds_alternative<RegisterDecl>(p.statements[0]));
  const auto& cx = std::get<GateApply>(p.statements[1]);
  CHECK(cx.name == "cx");
  CHECK(cx.params.empty());
  REQUIRE(cx.targets.size() == 2);
  CHECK(*cx.targets[1].index == 1);
}

TEST_CASE("custom gates resolve from their definition") {
  const auto p = parse_qasm_string("gate mygate(theta) a { u1(theta) a; } qreg q[1]; mygate(0.5) q[0];");
  REQUIRE(p.statements.size() == 3);
  CHECK(std::get<GateDef>(p.statements[0]).body.size() == 1);
  CHECK(std::get<GateApply>(p.statements[2]).name == "mygate");
  CHECK(code_of("gate g a { x a; } qreg q[2]; g q[0], q[1];") == "PAR103");
}

TEST_CASE("version header") {
  CHECK_FALSE(parse_qasm_string("").version);
  const auto p = parse_qasm_string("OPENQASM 2.0; qreg q[1]; h q[0];");
  REQUIRE(p.version);
  CHECK(p.version->major == 2);
  CHECK(p.version->minor == 0);
  CHECK(p.statements.size() == 2);
}

TEST_CASE("lex then parse equals parse_qasm_string") {
  const std::string src = "OPENQASM 2.0; qreg q[2]; creg c[2]; h q[0]; cx q[0], q[1]; measure q -> c;";
  CHECK(frontend::structurally_equal(to_ast(parse_qasm(lex_qasm(src))), to_ast(parse_qasm_string(src)), true));
}

TEST_CASE("parse errors") {
  CHECK(code_of("qreg q[1]; cx q[0];") == "PAR103");
  CHECK(code_of("qreg q[1]; u1 q[0];") == "PAR103");
  CHECK(code_of("qreg q[1]; reset q[0], q[0];") == "PAR103");
  CHECK(code_of("qreg q[1]; foo q[0];") == "PAR102");
  CHECK(code_of("qreg q[1]; x r[0];") == "PAR104");
  CHECK(code_of("qreg q[1]; x q[1];") == "PAR105");
  CHECK(code_of("qreg q[1]; h q;") == "PAR101");
  CHECK(code_of("qreg q[1]; x q[0]") == "PAR101");
  CHECK(code_of("qreg q[2]; creg c[1]; measure q -> c;") == "PAR105");
  CHECK(code_of("qreg q[2]; creg c[2]; measure q[0] -> c;") == "PAR101");
  CHECK(code_of("qreg q[1]; creg c[1]; x c[0];") == "PAR108");
  CHECK(code_of("gate x a { }") == "PAR109");
}

TEST_CASE("corpus parses, prints and reparses") {
  for (const auto& path : corpus::files("qasm")) {
    CAPTURE(path.string());
    const auto src = corpus::read(path);
    CHECK(lex_qasm(src).reconstruct() == src);
    const auto program = parse_qasm_string(src);
    const auto tree = to_ast(program);
    CHECK(frontend::spans_nest(tree));
    const auto printed = print_program(program);
    CHECK(frontend::structurally_equal(tree, to_ast(parse_qasm_string(printed))));
    CHECK(print_program(parse_qasm_string(printed)) == printed);
  }
}

TEST_CASE("QASM expressions print with ^") {
  const auto e = parse_qasm_expression(lex_qasm("2^3^2"));
  CHECK(e.kind == frontend::ExprKind::Pow);
  CHECK(e.operands[1].kind == frontend::ExprKind::Pow);
  CHECK(print_expression(e) == "2 ^ 3 ^ 2");
  CHECK(print_expression(parse_qasm_expression(lex_qasm("-pi/2"))) == "-pi / 2");
}
