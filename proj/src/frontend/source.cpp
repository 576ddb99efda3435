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

#include "frontend/source.hpp"

#include <algorithm>

#include "frontend/diagnostic.hpp"

namespace qparse::frontend {

std::size_t utf8_sequence_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 1;  // stray continuation byte; only reachable on unvalidated input
}

namespace {

// Returns the byte length of the well-formed sequence at `i`, or 0.
std::size_t valid_sequence_at(std::string_view text, std::size_t i) {
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(text[k]); };
  const unsigned char b0 = byte(i);
  if (b0 < 0x80) return 1;
  std::size_t len = 0;
  std::uint32_t cp = 0;
  if (b0 >= 0xC2 && b0 <= 0xDF) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if (b0 >= 0xF0 && b0 <= 0xF4) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return 0;
  }
  if (i + len > text.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    const unsigned char b = byte(i + k);
    if ((b & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (b & 0x3F);
  }
  if (len == 3 && (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF))) return 0;
  if (len == 4 && (cp < 0x10000 || cp > 0x10FFFF)) return 0;
  return len;
}

}  // namespace

bool is_valid_utf8(std::string_view text) {
  for (std::size_t i = 0; i < text.size();) {
    const std::size_t n = valid_sequence_at(text, i);
    if (n == 0) return false;
    i += n;
  }
  return true;
}

Cursor Cursor::open(std::string_view source) {
  SourcePosition pos;
  for (std::size_t i = 0; i < source.size();) {
    const std::size_t n = valid_sequence_at(source, i);
    if (n == 0) {
      pos.offset = i;
      SourcePosition end = pos;
      end.offset = i + 1;
      end.column = pos.column + 1;
      throw DiagnosticError("LEX000", "invalid UTF-8 byte sequence", Span{pos, end});
    }
    if (source[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
    i += n;
  }
  return Cursor(source);
}

void Cursor::advance() {
  if (at_end()) return;
  const char c = source_[pos_.offset];
  const std::size_t n =
      std::min(utf8_sequence_length(static_cast<unsigned char>(c)), source_.size() - pos_.offset);
  pos_.offset += n;
  if (c == '\n') {
    ++pos_.line;
    pos_.column = 1;
  } else {
    ++pos_.column;
  }
}

void Cursor::advance_bytes(std::size_t bytes) {
  const std::size_t target = std::min(pos_.offset + bytes, source_.size());
  while (pos_.offset < target) advance();
}

}  // namespace qparse::frontend
