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

#include <optional>
#include <span>
#include <string_view>

namespace qparse::qasm {

struct GateSignature {
  std::string_view name;
  int param_count;
  int qubit_count;
};

/// Built-in gate library. `reset` is listed here for completeness but is
/// parsed as a Reset statement.
std::span<const GateSignature> builtin_gates();

std::optional<GateSignature> find_builtin_gate(std::string_view name);

}  // namespace qparse::qasm
