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

#include <charconv>
#include <cmath>
#include <string>

#include "frontend/lexer_support.hpp"

namespace qparse::frontend {

namespace {

[[noreturn]] void malformed(Cursor& cursor, SourcePosition start, std::string_view code) {
  // Swallow the rest of the offending run so the caret covers all of it.
  while (is_ident_continue(cursor.peek()) || cursor.peek() == '.') cursor.advance();
  throw DiagnosticError(std::string(code),
                        "malformed number '" + std::string(cursor.slice(start.offset, cursor.position().offset)) + "'",
                        Span{start, cursor.position()});
}

}  // namespace

NumberLiteral scan_number(Cursor& cursor, std::string_view malformed_code, bool allow_imaginary,
                          bool negative) {
  const SourcePosition start = cursor.position();
  NumberLiteral lit;

  bool int_digits = false;
  while (is_digit(cursor.peek())) {
    cursor.advance();
    int_digits = true;
  }
  if (cursor.peek() == '.' && cursor.peek(1) != '.') {
    const bool frac_digits = is_digit(cursor.peek(1));
    if (!int_digits && !frac_digits) malformed(cursor, start, malformed_code);
    lit.is_real = true;
    cursor.advance();
    while (is_digit(cursor.peek())) cursor.advance();
  }
  if ((cursor.peek() == 'e' || cursor.peek() == 'E')) {
    std::size_t k = 1;
    if (cursor.peek(k) == '+' || cursor.peek(k) == '-') ++k;
    if (!is_digit(cursor.peek(k))) malformed(cursor, start, malformed_code);
    lit.is_real = true;
    cursor.advance_bytes(k);
    while (is_digit(cursor.peek())) cursor.advance();
  }

  const std::string_view digits = cursor.slice(start.offset, cursor.position().offset);

  if (allow_imaginary && cursor.peek() == 'j') {
    cursor.advance();
    lit.imaginary = true;
  }
  if (is_ident_continue(cursor.peek()) || (cursor.peek() == '.' && cursor.peek(1) != '.'))
    malformed(cursor, start, malformed_code);

  if (lit.is_real || lit.imaginary) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || !std::isfinite(v))
      malformed(cursor, start, malformed_code);
    lit.value = negative ? -v : v;
  } else {
    const std::string text = (negative ? "-" : "") + std::string(digits);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) malformed(cursor, start, malformed_code);
    lit.value = v;
  }
  return lit;
}

}  // namespace qparse::frontend
