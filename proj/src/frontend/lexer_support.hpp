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
#include <utility>

#include "frontend/diagnostic.hpp"
#include "frontend/source.hpp"
#include "frontend/token.hpp"

namespace qparse::frontend {

inline bool is_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
inline bool is_ident_start(char c) { return is_alpha(c) || c == '_'; }
inline bool is_ident_continue(char c) { return is_ident_start(c) || is_digit(c); }

/// True when a numeric literal begins `ahead` bytes past the cursor.
inline bool starts_number(const Cursor& cursor, std::size_t ahead = 0) {
  return is_digit(cursor.peek(ahead)) || (cursor.peek(ahead) == '.' && is_digit(cursor.peek(ahead + 1)));
}

/// Accumulates tokens while a lexer walks a Cursor. Everything skipped
/// between two emitted tokens becomes the later token's leading trivia.
template <typename Kind>
class StreamBuilder {
 public:
  explicit StreamBuilder(Cursor& cursor) : cursor_(cursor) {}

  /// Records the start of the token about to be scanned.
  void mark() { start_ = cursor_.position(); }
  SourcePosition marked() const { return start_; }

  Token<Kind>& emit(Kind kind, Scalar value = {}) {
    const SourcePosition end = cursor_.position();
    Token<Kind> t;
    t.kind = kind;
    t.span = Span{start_, end};
    t.lexeme = std::string(cursor_.slice(start_.offset, end.offset));
    t.value = std::move(value);
    t.leading_trivia = std::string(cursor_.slice(last_end_, start_.offset));
    last_end_ = end.offset;
    stream_.tokens.push_back(std::move(t));
    return stream_.tokens.back();
  }

  const std::vector<Token<Kind>>& tokens() const { return stream_.tokens; }

  TokenStream<Kind> finish() {
    stream_.end = cursor_.position();
    stream_.trailing_trivia = std::string(cursor_.slice(last_end_, stream_.end.offset));
    return std::move(stream_);
  }

  [[noreturn]] void fail(std::string_view code, std::string message) const {
    throw DiagnosticError(std::string(code), std::move(message), Span{start_, cursor_.position()});
  }

 private:
  Cursor& cursor_;
  SourcePosition start_;
  std::size_t last_end_ = 0;
  TokenStream<Kind> stream_;
};

struct NumberLiteral {
  bool is_real = false;
  bool imaginary = false;  // trailing 'j' (only when allowed)
  Scalar value;            // int64 or double
};

/// Scans an integer or real literal starting at the cursor. Integers are
/// decimal digit runs; reals need a digit on at least one side of the point
/// and may carry an exponent `e[+-]?digits`. A '.' followed by another '.'
/// is never taken as a decimal point, so `1..3` scans as `1`.
///
/// `negative` negates the value (the caller has already consumed the sign).
/// Throws DiagnosticError(`malformed_code`) when the literal is immediately
/// followed by identifier characters, a stray '.', or out-of-range digits.
NumberLiteral scan_number(Cursor& cursor, std::string_view malformed_code, bool allow_imaginary,
                          bool negative = false);

}  // namespace qparse::frontend
