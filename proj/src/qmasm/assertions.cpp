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

#include "qmasm/assertions.hpp"

#include "frontend/diagnostic.hpp"

namespace qparse::qmasm {

std::vector<AssertionVerdict> check_assertions(const std::vector<ResolvedStatement>& statements,
                                               const IsingModel*, const GroundStateResult*) {
  std::vector<AssertionVerdict> out;
  for (const auto& stmt : statements) {
    const auto* a = std::get_if<Assertion>(&stmt);
    if (a == nullptr) continue;
    const ClassicalValue v = evaluate(a->condition, {});
    const auto* b = std::get_if<bool>(&v);
    if (b == nullptr)
      throw frontend::DiagnosticError("SEM306", "assertion must be Bool, got " + type_name(v), a->span);
    out.push_back(AssertionVerdict{a->text, a->span, *b});
  }
  return out;
}

void require_assertions(const std::vector<AssertionVerdict>& verdicts) {
  for (const auto& v : verdicts)
    if (!v.holds) throw frontend::DiagnosticError("SEM317", "assertion failed: " + v.text, v.span);
}

}  // namespace qparse::qmasm
