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

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "frontend/source.hpp"

namespace qparse::frontend {

/// Literal text -> token kind lookup with longest-match semantics.
template <typename Kind>
class LexemeTable {
 public:
  struct Match {
    Kind kind;
    std::size_t length;
  };

  LexemeTable(std::initializer_list<std::pair<std::string_view, Kind>> entries) {
    for (const auto& [text, kind] : entries) {
      if (text.empty()) throw std::invalid_argument("empty lexeme in table");
      for (const auto& e : entries_)
        if (e.first == text) throw std::invalid_argument("duplicate lexeme '" + std::string(text) + "'");
      entries_.emplace_back(std::string(text), kind);
    }
    // Longest literals first so the first hit is the longest match.
    std::stable_sort(entries_.begin(), entries_.end(),
                     [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  }

  std::optional<Match> match_longest(std::string_view remaining) const {
    for (const auto& [text, kind] : entries_)
      if (remaining.starts_with(text)) return Match{kind, text.size()};
    return std::nullopt;
  }

  std::optional<Kind> find_exact(std::string_view text) const {
    for (const auto& [t, kind] : entries_)
      if (t == text) return kind;
    return std::nullopt;
  }

  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<std::pair<std::string, Kind>> entries_;
};

/// Longest table entry that prefixes the cursor's remaining input. The cursor
/// is left where it was; the caller advances by the returned length.
template <typename Kind>
std::optional<typename LexemeTable<Kind>::Match> match_longest(const Cursor& cursor,
                                                               const LexemeTable<Kind>& table) {
  return table.match_longest(cursor.remaining());
}

}  // namespace qparse::frontend
