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

#include <string>
#include <vector>

#include "qmasm/elaborate.hpp"
#include "qmasm/ising.hpp"
#include "qmasm/solver.hpp"

namespace qparse::qmasm {

struct AssertionVerdict {
  std::string text;
  Span span;
  bool holds = false;
};

/// Evaluates every Assertion among the statements, in order. Assertions are
/// closed classical expressions, so the model and ground states do not
/// affect the verdicts; they are accepted for callers that have them.
/// Errors: SEM306 an assertion that is not Bool.
std::vector<AssertionVerdict> check_assertions(const std::vector<ResolvedStatement>& statements,
                                               const IsingModel* model = nullptr,
                                               const GroundStateResult* result = nullptr);

/// Throws SEM317 for the first failed verdict.
void require_assertions(const std::vector<AssertionVerdict>& verdicts);

}  // namespace qparse::qmasm
