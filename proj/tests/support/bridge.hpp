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

// Conversions between library models and the oracle's dense form, plus the
// comparisons shared by the solver tests and the acceptance suite.

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "qmasm/ising.hpp"
#include "qmasm/qubo.hpp"
#include "qmasm/solver.hpp"

namespace bridge {

inline oracle::Dense to_dense(const qparse::qmasm::IsingModel& m) {
  oracle::Dense d(m.symbols());
  for (const auto& [s, v] : m.h) d.h[d.index(s)] += v;
  for (const auto& [p, v] : m.J) d.couple(d.index(p.first), d.index(p.second), v);
  for (const auto& [s, v] : m.pins) d.pin[d.index(s)] = v ? 1 : -1;
  for (const auto& [a, b] : m.chains) d.equal.emplace_back(d.index(a), d.index(b));
  for (const auto& [a, b] : m.antichains) d.opposite.emplace_back(d.index(a), d.index(b));
  return d;
}

inline qparse::qmasm::SpinConfiguration to_config(const oracle::Dense& d, const std::vector<int>& spins) {
  qparse::qmasm::SpinConfiguration c;
  for (std::size_t i = 0; i < spins.size(); ++i) c[d.names[i]] = spins[i];
  return c;
}

/// Adds a few random hard constraints to a generated model. Chains and
/// anti-chains may contradict each other; pins only ever pick a value.
inline void add_constraints(std::mt19937_64& rng, qparse::qmasm::IsingModel& m, int n) {
  if (n < 2) return;
  const int count = gen::pick(rng, 3);
  for (int k = 0; k < count; ++k) {
    const int a = gen::pick(rng, n);
    int b = gen::pick(rng, n - 1);
    if (b >= a) ++b;
    const auto pair = qparse::qmasm::make_symbol_pair("s" + std::to_string(a), "s" + std::to_string(b));
    switch (gen::pick(rng, 3)) {
      case 0: m.chains.insert(pair); break;
      case 1: m.antichains.insert(pair); break;
      default: m.pins["s" + std::to_string(a)] = gen::pick(rng, 2) == 1; break;
    }
  }
}

/// True when the solver's ground states are exactly the oracle's, in the
/// same order, and the energies agree to `tolerance`.
inline bool same_ground_states(const qparse::qmasm::GroundStateResult& got, const oracle::Ground& want,
                               const oracle::Dense& d, double tolerance = 1e-9) {
  if (got.states.size() != want.states.size()) return false;
  if (got.feasible_count != want.feasible) return false;
  if (std::fabs(got.min_energy - want.energy) > tolerance) return false;
  for (std::size_t k = 0; k < want.states.size(); ++k)
    if (got.configuration(k) != to_config(d, want.states[k])) return false;
  return true;
}

/// E_ising(s) == E_qubo((s+1)/2) for every configuration of the model.
inline bool qubo_matches_everywhere(const qparse::qmasm::IsingModel& m, double tolerance = 1e-12) {
  const auto q = qparse::qmasm::ising_to_qubo(m);
  std::map<std::pair<std::string, std::string>, mpq_class> quad(q.quadratic.begin(), q.quadratic.end());
  const auto d = to_dense(m);
  const std::size_t n = d.names.size();
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
    std::vector<int> s(n);
    std::map<std::string, int> x;
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = (c >> i) & 1 ? 1 : -1;
      x[d.names[i]] = (s[i] + 1) / 2;
    }
    const double e_ising = oracle::energy(d, s);
    const double e_qubo = oracle::qubo_value(q.linear, quad, q.offset, x).get_d();
    if (std::fabs(e_ising - e_qubo) > tolerance) return false;
  }
  return true;
}

/// Ising -> QUBO -> Ising reproduces every coefficient bit for bit (a
/// field absent on one side counts as zero).
inline bool qubo_round_trip_exact(const qparse::qmasm::IsingModel& m) {
  const auto back = qparse::qmasm::qubo_to_ising(qparse::qmasm::ising_to_qubo(m));
  auto field = [](const qparse::qmasm::IsingModel& x, const std::string& s) {
    auto it = x.h.find(s);
    return it == x.h.end() ? 0.0 : it->second;
  };
  for (const auto& s : m.symbols())
    if (field(m, s) != field(back, s)) return false;
  for (const auto& s : back.symbols())
    if (field(m, s) != field(back, s)) return false;
  if (back.J.size() != m.J.size()) return false;
  for (const auto& [p, v] : m.J) {
    auto it = back.J.find(p);
    if (it == back.J.end() || it->second != v) return false;
  }
  return true;
}

}  // namespace bridge
