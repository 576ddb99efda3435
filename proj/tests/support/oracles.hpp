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

// Reference implementations used to check the library. They are written
// without calling the code under test: plain loops over dense arrays.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

/// Dense Ising model over symbols 0..n-1.
struct Dense {
  std::vector<std::string> names;
  std::vector<double> h;
  std::vector<std::vector<double>> J;  // J[i][j], only i < j used
  std::vector<int> pin;                // 0 = free, otherwise +1 or -1
  std::vector<std::pair<int, int>> equal;
  std::vector<std::pair<int, int>> opposite;

  explicit Dense(std::vector<std::string> symbols)
      : names(std::move(symbols)),
        h(names.size(), 0.0),
        J(names.size(), std::vector<double>(names.size(), 0.0)),
        pin(names.size(), 0) {}

  int index(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    return -1;
  }

  void couple(int a, int b, double v) {
    if (a > b) std::swap(a, b);
    J[a][b] += v;
  }
};

/// sum_i h_i s_i + sum_{i<j} J_ij s_i s_j
inline double energy(const Dense& m, const std::vector<int>& s) {
  double e = 0;
  const std::size_t n = m.names.size();
  for (std::size_t i = 0; i < n; ++i) e += m.h[i] * s[i];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e += m.J[i][j] * s[i] * s[j];
  return e;
}

inline bool feasible(const Dense& m, const std::vector<int>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (m.pin[i] != 0 && s[i] != m.pin[i]) return false;
  for (const auto& [a, b] : m.equal)
    if (s[a] != s[b]) return false;
  for (const auto& [a, b] : m.opposite)
    if (s[a] == s[b]) return false;
  return true;
}

struct Ground {
  bool any = false;
  double energy = 0;
  std::vector<std::vector<int>> states;  // spins in `names` order
  std::uint64_t feasible = 0;
};

/// Every configuration, lowest energy first by a plain scan. Spins are
/// generated by counting upward in base 2 with -1 for a 0 digit and the
/// first symbol as the most significant digit.
inline Ground ground_states(const Dense& m, double tolerance = 1e-9) {
  const std::size_t n = m.names.size();
  std::vector<std::pair<double, std::vector<int>>> all;
  Ground g;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
    std::vector<int> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = ((c >> (n - 1 - i)) & 1) ? 1 : -1;
    if (!feasible(m, s)) continue;
    ++g.feasible;
    all.emplace_back(energy(m, s), s);
  }
  if (all.empty()) return g;
  g.any = true;
  g.energy = all.front().first;
  for (const auto& [e, s] : all) g.energy = std::min(g.energy, e);
  for (const auto& [e, s] : all)
    if (std::fabs(e - g.energy) <= tolerance) g.states.push_back(s);
  return g;
}

/// Value of a QUBO at x in {0,1}, with exact rational arithmetic.
inline mpq_class qubo_value(const std::map<std::string, mpq_class>& linear,
                            const std::map<std::pair<std::string, std::string>, mpq_class>& quadratic,
                            const mpq_class& offset, const std::map<std::string, int>& x) {
  mpq_class e = offset;
  for (const auto& [name, a] : linear)
    if (x.at(name) == 1) e += a;
  for (const auto& [pair, b] : quadratic)
    if (x.at(pair.first) == 1 && x.at(pair.second) == 1) e += b;
  return e;
}

}  // namespace oracle
