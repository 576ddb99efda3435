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

#include "qmasm/solver.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <limits>
#include <map>

#include "frontend/diagnostic.hpp"

namespace qparse::qmasm {

using frontend::DiagnosticError;

SpinConfiguration GroundStateResult::configuration(std::size_t k) const {
  SpinConfiguration out;
  const std::size_t n = symbols.size();
  for (std::size_t i = 0; i < n; ++i) out[symbols[i]] = (states.at(k) >> (n - 1 - i)) & 1 ? 1 : -1;
  return out;
}

namespace {

// Union-find over spins tracking parity to the root: chains force equal
// spins (parity 0), anti-chains opposite spins (parity 1).
class ParityClasses {
 public:
  explicit ParityClasses(std::size_t n) : parent_(n), parity_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }

  std::pair<std::size_t, int> find(std::size_t i) {
    if (parent_[i] == i) return {i, 0};
    const auto [root, p] = find(parent_[i]);
    parent_[i] = root;
    parity_[i] ^= p;
    return {root, parity_[i]};
  }

  bool relate(std::size_t a, std::size_t b, int parity) {
    const auto [ra, pa] = find(a);
    const auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == parity;
    parent_[rb] = ra;
    parity_[rb] = pa ^ pb ^ parity;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> parity_;
};

[[noreturn]] void infeasible(const std::string& why) {
  throw DiagnosticError("SEM312", "no configuration satisfies the constraints: " + why, frontend::Span{});
}

}  // namespace

GroundStateResult brute_force_ground_states(const IsingModel& model, int max_spins) {
  GroundStateResult result;
  result.symbols = model.symbols();
  const std::size_t n = result.symbols.size();
  const int limit = std::clamp(max_spins, 0, 63);
  if (n > static_cast<std::size_t>(limit))
    throw DiagnosticError("SEM311",
                          "model has " + std::to_string(n) + " spins; the exact solver is limited to " +
                              std::to_string(limit),
                          frontend::Span{});

  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[result.symbols[i]] = i;

  ParityClasses classes(n);
  for (const auto& [a, b] : model.chains)
    if (!classes.relate(index[a], index[b], 0)) infeasible("chain " + a + " = " + b);
  for (const auto& [a, b] : model.antichains)
    if (!classes.relate(index[a], index[b], 1)) infeasible("anti-chain " + a + " /= " + b);

  // Each spin is sign[i] * x[root]; pins fix the value of their root.
  std::vector<std::size_t> root(n);
  std::vector<int> sign(n);
  std::map<std::size_t, int> fixed;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [r, p] = classes.find(i);
    root[i] = r;
    sign[i] = p ? -1 : 1;
  }
  for (const auto& [s, value] : model.pins) {
    const std::size_t i = index[s];
    const int x = (value ? 1 : -1) * sign[i];
    const auto [it, fresh] = fixed.emplace(root[i], x);
    if (!fresh && it->second != x) infeasible("pin " + s + " := " + (value ? "true" : "false"));
  }

  // Free class variables, in increasing symbol order of their roots.
  std::vector<std::size_t> free_roots;
  for (std::size_t i = 0; i < n; ++i)
    if (root[i] == i && !fixed.count(i)) free_roots.push_back(i);
  const std::size_t f = free_roots.size();
  std::vector<int> slot(n, -1);
  for (std::size_t k = 0; k < f; ++k) slot[free_roots[k]] = static_cast<int>(k);

  // Reduced energy over free variables y: constant + sum field[k] y_k
  // + sum coupling[k][l] y_k y_l.
  double constant = 0;
  std::vector<double> field(f, 0.0);
  std::vector<std::vector<double>> coupling(f, std::vector<double>(f, 0.0));
  const auto term = [&](std::size_t i) -> std::pair<int, int> {  // (slot or -1, coefficient)
    const int s = slot[root[i]];
    if (s >= 0) return {s, sign[i]};
    return {-1, sign[i] * fixed.at(root[i])};
  };
  for (const auto& [sym, v] : model.h) {
    const auto [s, c] = term(index[sym]);
    if (s < 0)
      constant += v * c;
    else
      field[s] += v * c;
  }
  for (const auto& [pair, v] : model.J) {
    const auto [s1, c1] = term(index[pair.first]);
    const auto [s2, c2] = term(index[pair.second]);
    const double w = v * c1 * c2;
    if (s1 < 0 && s2 < 0)
      constant += w;
    else if (s1 < 0)
      field[s2] += w;
    else if (s2 < 0)
      field[s1] += w;
    else if (s1 == s2)
      constant += w;
    else {
      coupling[s1][s2] += w;
      coupling[s2][s1] += w;
    }
  }

  // Gray-code walk starting from all y = -1, with O(f) energy updates.
  std::vector<int> y(f, -1);
  double e = constant;
  for (std::size_t k = 0; k < f; ++k) {
    e -= field[k];
    for (std::size_t l = k + 1; l < f; ++l) e += coupling[k][l];
  }
  constexpr double kCandidateSlack = 1e-6;
  double best = e;
  std::vector<std::uint64_t> candidates{0};
  const std::uint64_t total = std::uint64_t{1} << f;
  std::uint64_t code = 0;
  for (std::uint64_t step = 1; step < total; ++step) {
    const std::size_t k = static_cast<std::size_t>(__builtin_ctzll(step));
    double local = field[k];
    for (std::size_t l = 0; l < f; ++l) local += coupling[k][l] * y[l];
    e -= 2.0 * y[k] * local;
    y[k] = -y[k];
    code ^= std::uint64_t{1} << k;
    if (e < best - kCandidateSlack) {
      best = e;
      candidates.clear();
    }
    if (e <= best + kCandidateSlack) candidates.push_back(code);
  }

  // Expand candidates to full states and rescore them exactly.
  const auto expand = [&](std::uint64_t bits) {
    std::uint64_t state = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const int s = slot[root[i]];
      const int x = s >= 0 ? ((bits >> s) & 1 ? 1 : -1) : fixed.at(root[i]);
      if (x * sign[i] > 0) state |= std::uint64_t{1} << (n - 1 - i);
    }
    return state;
  };
  std::vector<std::pair<double, std::uint64_t>> scored;
  scored.reserve(candidates.size());
  for (const auto bits : candidates) {
    const std::uint64_t state = expand(bits);
    result.states = {state};
    scored.emplace_back(energy(model, result.configuration(0)), state);
  }
  double min_energy = std::numeric_limits<double>::infinity();
  for (const auto& [en, s] : scored) min_energy = std::min(min_energy, en);
  result.states.clear();
  for (const auto& [en, s] : scored)
    if (en <= min_energy + 1e-9) result.states.push_back(s);
  std::sort(result.states.begin(), result.states.end());
  result.min_energy = min_energy;
  result.feasible_count = total;
  return result;
}

std::string result_to_json(const GroundStateResult& result) {
  nlohmann::ordered_json out;
  const double e = result.min_energy;
  if (std::nearbyint(e) == e && std::fabs(e) < 9007199254740992.0)
    out["energy"] = static_cast<std::int64_t>(e);
  else
    out["energy"] = e;
  out["states"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < result.states.size(); ++k) {
    nlohmann::ordered_json state = nlohmann::ordered_json::object();
    for (const auto& [s, v] : result.configuration(k)) state[s] = v;
    out["states"].push_back(std::move(state));
  }
  out["feasible"] = result.feasible_count;
  return out.dump();
}

}  // namespace qparse::qmasm
