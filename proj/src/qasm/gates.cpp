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

#include "qasm/gates.hpp"

#include <array>

namespace qparse::qasm {

namespace {

constexpr std::array<GateSignature, 19> kBuiltins{{
    {"x", 0, 1},   {"y", 0, 1},   {"z", 0, 1},   {"u1", 1, 1},  {"u2", 2, 1},
    {"u3", 3, 1},  {"s", 0, 1},   {"sdg", 0, 1}, {"h", 0, 1},   {"tdg", 0, 1},
    {"cx", 0, 2},  {"cy", 0, 2},  {"cz", 0, 2},  {"t", 0, 1},   {"ccx", 0, 3},
    {"reset", 0, 1}, {"cu1", 1, 2}, {"ccy", 0, 3}, {"ccz", 0, 3},
}};

}  // namespace

std::span<const GateSignature> builtin_gates() { return kBuiltins; }

std::optional<GateSignature> find_builtin_gate(std::string_view name) {
  for (const auto& g : kBuiltins)
    if (g.name == name) return g;
  return std::nullopt;
}

}  // namespace qparse::qasm
