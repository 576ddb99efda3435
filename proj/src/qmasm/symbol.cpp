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

#include "qmasm/symbol.hpp"

#include <charconv>

namespace qparse::qmasm {

std::string_view to_string(SymbolRole role) {
  switch (role) {
    case SymbolRole::Qubit: return "Qubit";
    case SymbolRole::Ancilliary: return "Ancilliary";
    case SymbolRole::QubitArray: return "QubitArray";
    case SymbolRole::Register: return "Register";
  }
  return "?";
}

std::string QuantumSymbol::element(std::int64_t i) const { return name + "[" + std::to_string(i) + "]"; }

namespace {

std::optional<std::int64_t> parse_index(std::string_view text) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || v < 0) return std::nullopt;
  return v;
}

}  // namespace

std::optional<QuantumSymbol> classify_symbol(std::string_view symbol) {
  if (symbol.empty()) return std::nullopt;
  QuantumSymbol out;
  std::string_view base = symbol;

  if (symbol.back() == ']') {
    const auto open = symbol.rfind('[');
    if (open == std::string_view::npos || open == 0) return std::nullopt;
    const std::string_view inside = symbol.substr(open + 1, symbol.size() - open - 2);
    base = symbol.substr(0, open);
    if (base.find_first_of("[]") != std::string_view::npos) return std::nullopt;
    out.name = std::string(base);
    if (const auto colon = inside.find(':'); colon != std::string_view::npos) {
      const auto hi = parse_index(inside.substr(0, colon));
      const auto lo = parse_index(inside.substr(colon + 1));
      if (!hi || !lo) return std::nullopt;
      const std::int64_t step = *hi >= *lo ? -1 : 1;
      if ((*hi >= *lo ? *hi - *lo : *lo - *hi) >= 63) return std::nullopt;
      for (std::int64_t i = *hi;; i += step) {
        out.register_indices.push_back(i);
        if (i == *lo) break;
      }
      out.role = SymbolRole::Register;
      return out;
    }
    out.index = parse_index(inside);
    if (!out.index) return std::nullopt;
    out.role = SymbolRole::QubitArray;
    return out;
  }

  if (symbol.find_first_of("[]") != std::string_view::npos) return std::nullopt;
  out.name = std::string(symbol);
  const auto dot = base.rfind('.');
  const std::string_view last = dot == std::string_view::npos ? base : base.substr(dot + 1);
  out.role = !last.empty() && last.front() == '_' ? SymbolRole::Ancilliary : SymbolRole::Qubit;
  return out;
}

}  // namespace qparse::qmasm
