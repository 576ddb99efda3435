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

namespace qparse::blackbird {

enum class OperatorClass { Gate, Preparation };

/// Accepted shapes of one operator application. `mode_count == 0` means the
/// operator acts on a variable number of modes, fixed by its matrix argument.
struct OperatorSignature {
  std::string_view name;
  OperatorClass op_class;
  int min_args;
  int max_args;
  int mode_count;
  bool takes_matrix = false;

  bool accepts_arg_count(std::size_t n) const {
    return static_cast<int>(n) >= min_args && static_cast<int>(n) <= max_args;
  }
  bool variable_modes() const { return mode_count == 0; }
};

/// The 17 gates followed by the 7 state preparations.
std::span<const OperatorSignature> operator_table();

std::optional<OperatorSignature> find_operator(std::string_view name);

}  // namespace qparse::blackbird
