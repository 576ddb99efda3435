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

#include "blackbird/operators.hpp"

#include <array>

namespace qparse::blackbird {

namespace {

constexpr auto G = OperatorClass::Gate;
constexpr auto P = OperatorClass::Preparation;

constexpr std::array<OperatorSignature, 24> kOperators{{
    {"Xgate", G, 1, 1, 1},
    {"Zgate", G, 1, 1, 1},
    {"Dgate", G, 1, 2, 1},
    {"Sgate", G, 1, 2, 1},
    {"Rgate", G, 1, 1, 1},
    {"Pgate", G, 1, 1, 1},
    {"Vgate", G, 1, 1, 1},
    {"Kgate", G, 1, 1, 1},
    {"Fouriergate", G, 0, 0, 1},
    {"CXgate", G, 1, 1, 2},
    {"CZgate", G, 1, 1, 2},
    {"CKgate", G, 1, 1, 2},
    {"BSgate", G, 2, 2, 2},
    {"S2gate", G, 1, 2, 2},
    {"Interferometer", G, 1, 1, 0, true},
    {"GaussianTransform", G, 1, 1, 0, true},
    {"Gaussian", G, 1, 1, 0, true},
    {"Fock", P, 1, 1, 1},
    {"Coherent", P, 1, 2, 1},
    {"Squeezed", P, 1, 2, 1},
    {"Vac", P, 0, 0, 1},
    {"Thermal", P, 1, 1, 1},
    {"DisplacedSqueezed", P, 2, 4, 1},
    {"Catstate", P, 1, 2, 1},
}};

}  // namespace

std::span<const OperatorSignature> operator_table() { return kOperators; }

std::optional<OperatorSignature> find_operator(std::string_view name) {
  for (const auto& op : kOperators)
    if (op.name == name) return op;
  return std::nullopt;
}

}  // namespace qparse::blackbird
