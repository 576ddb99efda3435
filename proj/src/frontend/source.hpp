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

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace qparse::frontend {

/// A location in a source buffer. Lines and columns are 1-based, columns
/// count Unicode scalar values. Offsets are 0-based byte indices.
struct SourcePosition {
  std::uint32_t line = 1;
  std::uint32_t column = 1;
  std::size_t offset = 0;

  friend bool operator==(const SourcePosition&, const SourcePosition&) = default;
};

/// Half-open range [start, end) of source text.
struct Span {
  SourcePosition start;
  SourcePosition end;

  static Span at(SourcePosition p) { return Span{p, p}; }
  static Span cover(const Span& a, const Span& b) { return Span{a.start, b.end}; }

  bool contains(const Span& other) const {
    return start.offset <= other.start.offset && other.end.offset <= end.offset;
  }
  std::size_t length() const { return end.offset - start.offset; }

  friend bool operator==(const Span&, const Span&) = default;
};

/// Returns true when `text` is well-formed UTF-8 (no overlongs, no
/// surrogates, nothing above U+10FFFF).
bool is_valid_utf8(std::string_view text);

/// Number of bytes in the UTF-8 sequence introduced by `lead`.
std::size_t utf8_sequence_length(unsigned char lead);

/// Single-pass character cursor over validated UTF-8 text.
///
/// The cursor does not own the buffer. Position bookkeeping happens in
/// advance(): a '\n' bumps the line and resets the column, every other scalar
/// value moves one column to the right.
class Cursor {
 public:
  /// Validates the encoding and positions the cursor at 1:1. Throws
  /// DiagnosticError(LEX000) on malformed UTF-8.
  static Cursor open(std::string_view source);

  bool at_end() const { return pos_.offset >= source_.size(); }

  /// Byte `ahead` positions past the cursor, or '\0' beyond the end.
  char peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_.offset + ahead;
    return i < source_.size() ? source_[i] : '\0';
  }

  std::string_view remaining() const { return source_.substr(pos_.offset); }
  std::string_view source() const { return source_; }
  std::string_view slice(std::size_t from, std::size_t to) const {
    return source_.substr(from, to - from);
  }
  SourcePosition position() const { return pos_; }

  /// Consumes one scalar value.
  void advance();
  /// Consumes scalar values until `bytes` bytes have been passed.
  void advance_bytes(std::size_t bytes);

 private:
  explicit Cursor(std::string_view source) : source_(source) {}

  std::string_view source_;
  SourcePosition pos_;
};

}  // namespace qparse::frontend
