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

#include <cstdint>
#include <string>
#include <vector>

#include "qmasm/ising.hpp"

namespace qparse::qmasm {

inline constexpr int kDefaultMaxSpins = 24;

/// Exact minimum of the model's energy over all configurations that satisfy
/// its pins (true is +1), chains and anti-chains.
///
/// `symbols` is the model's sorted symbol list. A state packs one spin per
/// bit with symbols[0] in the most significant position; a set bit is +1.
/// States are sorted ascending, which orders them lexicographically by
/// symbol with -1 before +1.
struct GroundStateResult {
  double min_energy = 0;
  std::vector<std::string> symbols;
  std::vector<std::uint64_t> states;
  std::uint64_t feasible_count = 0;

  SpinConfiguration configuration(std::size_t k) const;
};

/// Errors: SEM311 more than `max_spins` (at most 63) symbols, SEM312 the
/// constraints admit no configuration.
GroundStateResult brute_force_ground_states(const IsingModel& model, int max_spins = kDefaultMaxSpins);

/// `{"energy":E,"states":[{sym:+1|-1,...},...],"feasible":n}`
std::string result_to_json(const GroundStateResult& result);

}  // namespace qparse::qmasm
