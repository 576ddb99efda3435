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

#include "qmasm/qubo.hpp"

namespace qparse::qmasm {

QuboModel ising_to_qubo(const IsingModel& model) {
  QuboModel q;
  for (const auto& s : model.symbols()) q.linear[s];
  for (const auto& [s, v] : model.h) {
    const mpq_class h(v);
    q.linear[s] += 2 * h;
    q.offset -= h;
  }
  for (const auto& [pair, v] : model.J) {
    const mpq_class j(v);
    q.quadratic[pair] += 4 * j;
    q.linear[pair.first] -= 2 * j;
    q.linear[pair.second] -= 2 * j;
    q.offset += j;
  }
  return q;
}

IsingModel qubo_to_ising(const QuboModel& qubo) {
  std::map<std::string, mpq_class> h;
  std::map<SymbolPair, mpq_class> J;
  for (const auto& [s, a] : qubo.linear) h[s] += a / 2;
  for (const auto& [pair, b] : qubo.quadratic) {
    J[pair] += b / 4;
    h[pair.first] += b / 4;
    h[pair.second] += b / 4;
  }
  IsingModel model;
  for (const auto& [s, v] : h) model.h[s] = v.get_d();
  for (const auto& [pair, v] : J) model.J[pair] = v.get_d();
  return model;
}

mpq_class qubo_energy(const QuboModel& qubo, const std::map<std::string, int>& x) {
  mpq_class e = qubo.offset;
  for (const auto& [s, a] : qubo.linear) e += a * x.at(s);
  for (const auto& [pair, b] : qubo.quadratic) e += b * (x.at(pair.first) * x.at(pair.second));
  return e;
}

}  // namespace qparse::qmasm
