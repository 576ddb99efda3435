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

#include <stdexcept>
#include <string>
#include <string_view>

#include "frontend/source.hpp"

namespace qparse::frontend {

enum class Severity { Error, Warning };

std::string_view to_string(Severity severity);

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;  // stable short id, e.g. "PAR103"
  std::string message;
  Span span;

  static Diagnostic error(std::string code, std::string message, Span span) {
    return Diagnostic{Severity::Error, std::move(code), std::move(message), span};
  }
};

/// Carries the first error of a lex/parse/semantic run. All pipelines are
/// fail-fast: the first error aborts the run.
class DiagnosticError : public std::runtime_error {
 public:
  explicit DiagnosticError(Diagnostic diag)
      : std::runtime_error(diag.code + ": " + diag.message), diag_(std::move(diag)) {}
  DiagnosticError(std::string code, std::string message, Span span)
      : DiagnosticError(Diagnostic::error(std::move(code), std::move(message), span)) {}

  const Diagnostic& diagnostic() const noexcept { return diag_; }

 private:
  Diagnostic diag_;
};

/// Renders
///
///     <severity> <code>: <message> at <line>:<column>
///     <source line>
///     <caret underline>
///
/// Only the first line of a multi-line span is underlined. The result ends
/// with a newline.
std::string render_diagnostic(const Diagnostic& diag, std::string_view source);

}  // namespace qparse::frontend
