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

#include <gmpxx.h>

#include <map>
#include <string>

#include "qmasm/ising.hpp"

namespace qparse::qmasm {

/// Quadratic pseudo-Boolean form over x in {0, 1}. Coefficients are exact
/// rationals so that converting back and forth loses nothing.
struct QuboModel {
  std::map<std::string, mpq_class> linear;
  std::map<SymbolPair, mpq_class> quadratic;
  mpq_class offset;
};

/// Substitutes s = 2x - 1. Every symbol of the model gets a linear entry.
/// Pins and relations are not carried over.
QuboModel ising_to_qubo(const IsingModel& model);

/// Substitutes x = (s + 1) / 2 and drops the constant. Every linear entry
/// becomes an `h` entry, every quadratic entry a `J` entry.
IsingModel qubo_to_ising(const QuboModel& qubo);

/// offset + sum linear_i x_i + sum quadratic_ij x_i x_j, exactly.
/// Throws std::out_of_range when a variable is missing from `x`.
mpq_class qubo_energy(const QuboModel& qubo, const std::map<std::string, int>& x);

}  // namespace qparse::qmasm
