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

#include "frontend/diagnostic.hpp"

#include <algorithm>

namespace qparse::frontend {

std::string_view to_string(Severity severity) {
  return severity == Severity::Error ? "error" : "warning";
}

namespace {

std::size_t count_scalars(std::string_view text) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < text.size(); i += utf8_sequence_length(static_cast<unsigned char>(text[i])))
    ++n;
  return n;
}

}  // namespace

std::string render_diagnostic(const Diagnostic& diag, std::string_view source) {
  std::string out;
  out += to_string(diag.severity);
  out += ' ';
  out += diag.code;
  out += ": ";
  out += diag.message;
  out += " at " + std::to_string(diag.span.start.line) + ":" + std::to_string(diag.span.start.column);
  out += '\n';

  const std::size_t start = std::min(diag.span.start.offset, source.size());
  const std::size_t line_begin = source.rfind('\n', start == 0 ? std::string_view::npos : start - 1);
  const std::size_t first = (start == 0 || line_begin == std::string_view::npos) ? 0 : line_begin + 1;
  std::size_t last = source.find('\n', start);
  if (last == std::string_view::npos) last = source.size();
  std::string_view line = source.substr(first, last - first);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

  out += line;
  out += '\n';

  for (std::size_t i = first; i < start && i < first + line.size();) {
    out += source[i] == '\t' ? '\t' : ' ';
    i += utf8_sequence_length(static_cast<unsigned char>(source[i]));
  }
  const std::size_t underline_end = std::clamp(diag.span.end.offset, start, first + line.size());
  const std::size_t width = std::max<std::size_t>(1, count_scalars(source.substr(start, underline_end - start)));
  out.append(width, '^');
  out += '\n';
  return out;
}

}  // namespace qparse::frontend
