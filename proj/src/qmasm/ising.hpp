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
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qmasm/elaborate.hpp"

namespace qparse::qmasm {

/// Unordered pair stored with `first < second`.
using SymbolPair = std::pair<std::string, std::string>;

SymbolPair make_symbol_pair(std::string a, std::string b);

/// 2-local Ising model. Keys are canonical symbols: each equivalence class
/// is represented by its lexicographically least member, and `aliases` maps
/// every other member to that representative.
struct IsingModel {
  std::map<std::string, double> h;
  std::map<SymbolPair, double> J;
  std::map<std::string, bool> pins;
  std::set<SymbolPair> chains;
  std::set<SymbolPair> antichains;
  std::set<SymbolPair> equivalences;  // as written, before aliasing
  std::map<std::string, std::string> aliases;

  /// Sorted distinct canonical symbols appearing anywhere in the model.
  std::vector<std::string> symbols() const;
};

/// Weights and couplings accumulate additively; relations and pins become
/// hard constraints. Errors: SEM308 coupling a symbol with itself (also
/// after aliasing), SEM309 conflicting pins on one equivalence class.
IsingModel flatten_to_ising(const std::vector<ResolvedStatement>& statements);

/// Spin assignment, +1 or -1 per symbol.
using SpinConfiguration = std::map<std::string, int>;

/// Sum of h_i s_i over symbols plus J_ij s_i s_j over stored pairs.
/// Errors: SEM310 when a model symbol is missing or not +/-1.
double energy(const IsingModel& model, const SpinConfiguration& config);

/// `{"h":{..},"J":[[a,b,v],..],"pins":{..},"chains":[..],"antichains":[..],"equiv":[..]}`
/// with sorted keys and pairs. Integral coefficients print without a
/// fractional part.
std::string ising_to_json(const IsingModel& model);

}  // namespace qparse::qmasm
