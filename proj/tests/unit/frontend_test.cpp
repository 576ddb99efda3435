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

#include "doctest.h"
#include "frontend/ast.hpp"
#include "frontend/diagnostic.hpp"
#include "frontend/expr.hpp"
#include "frontend/lexeme_table.hpp"
#include "frontend/source.hpp"

using namespace qparse::frontend;

namespace {

enum class K { Times, Power, Comma };

const LexemeTable<K>& table() {
  static const LexemeTable<K> t{{"*", K::Times}, {"**", K::Power}, {",", K::Comma}};
  return t;
}

Diagnostic error_of(auto&& fn) {
  try {
    fn();
  } catch (const DiagnosticError& e) {
    return e.diagnostic();
  }
  FAIL("expected a DiagnosticError");
  return {};
}

}  // namespace

TEST_CASE("cursor starts at 1:1 and tracks lines") {
  auto empty = Cursor::open("");
  CHECK(empty.at_end());

  auto c = Cursor::open("x q[0];");
  CHECK(c.position().line == 1);
  CHECK(c.position().column == 1);
  CHECK(c.position().offset == 0);

  auto nl = Cursor::open("a\nb");
  nl.advance();
  nl.advance();
  CHECK(nl.position().line == 2);
  CHECK(nl.position().column == 1);
  CHECK(nl.position().offset == 2);
}

TEST_CASE("columns count code points, offsets count bytes") {
  auto c = Cursor::open("\xce\xb8x");  // theta, x
  c.advance();
  CHECK(c.position().column == 2);
  CHECK(c.position().offset == 2);
  CHECK(c.peek() == 'x');
}

TEST_CASE("malformed UTF-8 is LEX000") {
  CHECK(error_of([] { Cursor::open("ok\xff"); }).code == "LEX000");
  CHECK(error_of([] { Cursor::open("\xc0\x80"); }).code == "LEX000");        // overlong
  CHECK(error_of([] { Cursor::open("\xed\xa0\x80"); }).code == "LEX000");    // surrogate
  CHECK(error_of([] { Cursor::open("\xf4\x90\x80\x80"); }).code == "LEX000");  // > U+10FFFF
  CHECK(is_valid_utf8("\xf0\x9f\x98\x80"));
}

TEST_CASE("longest match") {
  auto power = table().match_longest("**2");
  REQUIRE(power);
  CHECK(power->kind == K::Power);
  CHECK(power->length == 2);

  auto comma = match_longest(Cursor::open(",x"), table());
  REQUIRE(comma);
  CHECK(comma->kind == K::Comma);
  CHECK(comma->length == 1);

  CHECK_FALSE(table().match_longest("@"));
}

TEST_CASE("lexeme tables reject duplicates") {
  CHECK_THROWS_AS((LexemeTable<K>{{"*", K::Times}, {"*", K::Power}}), std::invalid_argument);
}

TEST_CASE("render_diagnostic puts the caret under the span") {
  const std::string src = "q1 = @";
  SourcePosition at{1, 6, 5};
  SourcePosition after{1, 7, 6};
  const auto text = render_diagnostic(Diagnostic::error("LEX001", "unknown character '@'", Span{at, after}), src);
  CHECK(text == "error LEX001: unknown character '@' at 1:6\nq1 = @\n     ^\n");
}

TEST_CASE("render_diagnostic picks the right line and strips CR") {
  const std::string src = "a\r\nbc d\r\n";
  SourcePosition at{2, 4, 6};
  SourcePosition after{2, 5, 7};
  const auto text = render_diagnostic(Diagnostic::error("PAR1", "m", Span{at, after}), src);
  CHECK(text == "error PAR1: m at 2:4\nbc d\n   ^\n");
}

TEST_CASE("serialize_ast json schema") {
  AstNode leaf("Int", Span{});
  leaf.set("value", std::int64_t{3});
  CHECK(serialize_ast(leaf, AstFormat::Json) ==
        R"({"kind":"Int","span":{"start":{"line":1,"col":1,"off":0},"end":{"line":1,"col":1,"off":0}},)"
        R"("attrs":{"value":3},"children":[]})");
}

TEST_CASE("serialize / deserialize round trip") {
  AstNode root("Root", Span{{1, 1, 0}, {2, 3, 9}});
  root.set("name", "x\"y\n").set("ok", true).set("r", 2.0).set("n", std::int64_t{-7});
  root.add(AstNode("Child", Span{{1, 2, 1}, {1, 4, 3}}));
  const auto json = serialize_ast(root, AstFormat::Json);
  const auto back = deserialize_ast(json);
  CHECK(structurally_equal(root, back, true));
  CHECK(serialize_ast(back, AstFormat::Json) == json);
  CHECK(std::holds_alternative<double>(back.attrs.at("r")));
  CHECK(serialize_ast(root, AstFormat::Pretty) == serialize_ast(back, AstFormat::Pretty));
}

TEST_CASE("deserialize_ast rejects bad input") {
  CHECK_THROWS_AS(deserialize_ast("{"), std::invalid_argument);
  CHECK_THROWS_AS(deserialize_ast(R"({"kind":1})"), std::invalid_argument);
  CHECK_THROWS_AS(deserialize_ast("[]"), std::invalid_argument);
}

TEST_CASE("structural equality ignores spans unless asked") {
  AstNode a("X", Span{{1, 1, 0}, {1, 2, 1}});
  AstNode b("X", Span{{3, 1, 10}, {3, 2, 11}});
  CHECK(structurally_equal(a, b));
  CHECK_FALSE(structurally_equal(a, b, true));
  b.set("k", std::int64_t{1});
  CHECK_FALSE(structurally_equal(a, b));
}

TEST_CASE("spans_nest") {
  AstNode outer("O", Span{{1, 1, 0}, {1, 10, 9}});
  outer.add(AstNode("I", Span{{1, 2, 1}, {1, 3, 2}}));
  CHECK(spans_nest(outer));
  outer.add(AstNode("J", Span{{1, 2, 1}, {1, 30, 29}}));
  CHECK_FALSE(spans_nest(outer));
}

TEST_CASE("format_real always reads back as a real") {
  CHECK(format_real(1.0) == "1.0");
  CHECK(format_real(0.1) == "0.1");
  CHECK(std::stod(format_real(1e300)) == 1e300);
  CHECK(std::stod(format_real(0.1 + 0.2)) == 0.1 + 0.2);
}

TEST_CASE("print_expr inserts only needed parentheses") {
  const ExprStyle style;
  auto i = [](std::int64_t v) { return Expr::literal(ExprKind::Int, v, Span{}); };
  auto n = [](const char* s) { return Expr::identifier(s, Span{}); };

  CHECK(print_expr(Expr::binary(ExprKind::Add, i(1), Expr::binary(ExprKind::Mul, i(2), i(3))), style) == "1 + 2 * 3");
  CHECK(print_expr(Expr::binary(ExprKind::Mul, Expr::binary(ExprKind::Add, i(1), i(2)), i(3)), style) ==
        "(1 + 2) * 3");
  CHECK(print_expr(Expr::binary(ExprKind::Sub, i(1), Expr::binary(ExprKind::Sub, i(2), i(3))), style) ==
        "1 - (2 - 3)");
  CHECK(print_expr(Expr::binary(ExprKind::Pow, i(2), Expr::binary(ExprKind::Pow, i(3), i(2))), style) ==
        "2 ** 3 ** 2");
  CHECK(print_expr(Expr::binary(ExprKind::Pow, Expr::binary(ExprKind::Pow, i(2), i(3)), i(2)), style) ==
        "(2 ** 3) ** 2");
  CHECK(print_expr(Expr::unary(ExprKind::Neg, Expr::binary(ExprKind::Add, n("a"), n("b")), Span{}), style) ==
        "-(a + b)");
}
