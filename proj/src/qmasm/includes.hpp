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

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmasm/ast.hpp"

namespace qparse::qmasm {

/// Returns the text of the named file, or std::nullopt when it does not
/// exist.
using SourceLoader = std::function<std::optional<std::string>(std::string_view path)>;

/// Searches `directories` in order for the requested path. Absolute paths
/// are read directly.
SourceLoader make_file_loader(std::vector<std::filesystem::path> directories);

inline constexpr int kMaxIncludeDepth = 16;

/// Replaces every `!include` (at any nesting level) by the statements of the
/// parsed file, depth first. Inlined statements take the span of the include
/// that brought them in, so later diagnostics point at the including file.
///
/// Errors: SEM301 missing file, SEM302 include cycle or nesting deeper than
/// kMaxIncludeDepth, PAR305 a macro definition included below top level;
/// lex and parse errors inside an included file are reported at the include
/// with their original code.
Program resolve_includes(const Program& program, const SourceLoader& loader);

/// Overwrites every span in the statement (including expressions) with `span`.
void respan(Statement& statement, const frontend::Span& span);

}  // namespace qparse::qmasm
