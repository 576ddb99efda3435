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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qparse::qmasm {

/// "Ancilliary" follows the spelling used by the QMASM feature list.
enum class SymbolRole { Qubit, Ancilliary, QubitArray, Register };

std::string_view to_string(SymbolRole role);

/// A symbol after interpolation. For `x[3]` the name is `x` and the index 3;
/// for the register `x[3:0]` the indices are listed in written order
/// (3, 2, 1, 0) and a pinned integer maps onto them most significant bit
/// first. A symbol whose last dotted component starts with `_` is an
/// ancillary qubit.
struct QuantumSymbol {
  SymbolRole role = SymbolRole::Qubit;
  std::string name;
  std::optional<std::int64_t> index;
  std::vector<std::int64_t> register_indices;

  /// Name of the qubit at `index`, e.g. `x[2]`.
  std::string element(std::int64_t index) const;
};

/// Returns std::nullopt when a bracket group is not a non-negative index or
/// an `a:b` range, or when a register is wider than 63 bits.
std::optional<QuantumSymbol> classify_symbol(std::string_view symbol);

}  // namespace qparse::qmasm
