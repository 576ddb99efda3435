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

#include <string>
#include <string_view>

#include "frontend/diagnostic.hpp"
#include "frontend/token.hpp"

namespace qparse::frontend {

/// Forward-only view over a TokenStream used by the recursive-descent parsers.
template <typename Kind>
class TokenReader {
 public:
  explicit TokenReader(const TokenStream<Kind>& stream) : stream_(stream) {}

  bool at_end() const { return index_ >= stream_.tokens.size(); }
  std::size_t index() const { return index_; }
  void rewind(std::size_t index) { index_ = index; }

  const Token<Kind>* peek(std::size_t ahead = 0) const {
    const std::size_t i = index_ + ahead;
    return i < stream_.tokens.size() ? &stream_.tokens[i] : nullptr;
  }

  bool check(Kind kind, std::size_t ahead = 0) const {
    const auto* t = peek(ahead);
    return t != nullptr && t->kind == kind;
  }

  const Token<Kind>& next() { return stream_.tokens.at(index_++); }

  const Token<Kind>* accept(Kind kind) {
    if (!check(kind)) return nullptr;
    return &next();
  }

  const Token<Kind>& previous() const { return stream_.tokens.at(index_ - 1); }

  /// Span of the current token, or an empty span at end of input.
  Span here() const { return at_end() ? Span::at(stream_.end) : stream_.tokens[index_].span; }

  /// Start of the source, used for whole-program spans.
  SourcePosition end_position() const { return stream_.end; }

  [[noreturn]] void fail(std::string_view code, std::string message) const {
    throw DiagnosticError(std::string(code), std::move(message), here());
  }

  const Token<Kind>& expect(Kind kind, std::string_view code, std::string_view what) {
    if (!check(kind)) fail(code, "expected " + std::string(what) + ", found " + describe_current());
    return next();
  }

  std::string describe_current() const {
    if (at_end()) return "end of input";
    const auto& t = stream_.tokens[index_];
    if (t.lexeme == "\n") return "end of line";
    return "'" + t.lexeme + "'";
  }

 private:
  const TokenStream<Kind>& stream_;
  std::size_t index_ = 0;
};

}  // namespace qparse::frontend
