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

#include <map>
#include <string>

#include "qmasm/ast.hpp"

namespace qparse::qmasm {

/// Replaces each `!use_macro m i1 ... ik` by k copies of m's body. In copy
/// number j every symbol s becomes `ij.s`, and `!next.s` becomes `i(j+1).s`.
/// In the last copy (k > 1) statements mentioning `!next.` are dropped.
/// Macros must be defined before use; uses inside a macro body are expanded
/// when the macro is defined. Macro definitions are dropped from the output;
/// loops and conditionals are kept with their bodies expanded.
///
/// Errors: SEM303 `!next.` in a macro used with a single instance, SEM304 unknown macro, SEM313
/// macro used inside its own definition.
Block expand_macros(const Program& program);

/// Same as expand_macros, also returning the definitions seen.
Block expand_macros(const Program& program, std::map<std::string, MacroDef>& macros);

}  // namespace qparse::qmasm
