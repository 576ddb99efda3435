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

#include "qmasm/ising.hpp"

#include <cmath>
#include <json.hpp>

#include "frontend/diagnostic.hpp"
#include "frontend/overloaded.hpp"

namespace qparse::qmasm {

using frontend::DiagnosticError;

SymbolPair make_symbol_pair(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

std::vector<std::string> IsingModel::symbols() const {
  std::set<std::string> all;
  for (const auto& [s, v] : h) all.insert(s);
  for (const auto& [p, v] : J) all.insert({p.first, p.second});
  for (const auto& [s, v] : pins) all.insert(s);
  for (const auto& p : chains) all.insert({p.first, p.second});
  for (const auto& p : antichains) all.insert({p.first, p.second});
  for (const auto& [alias, canonical] : aliases) all.insert(canonical);
  return {all.begin(), all.end()};
}

namespace {

class Aliases {
 public:
  const std::string& find(const std::string& s) {
    auto it = parent_.find(s);
    if (it == parent_.end()) return s;
    if (it->second == s) return it->second;
    const std::string root = find(it->second);
    it->second = root;
    return it->second;
  }

  void unite(const std::string& a, const std::string& b) {
    parent_.try_emplace(a, a);
    parent_.try_emplace(b, b);
    const std::string ra = find(a), rb = find(b);
    if (ra == rb) return;
    // The least member stays the root, so roots are canonical.
    if (ra < rb)
      parent_[rb] = ra;
    else
      parent_[ra] = rb;
  }

  std::map<std::string, std::string> non_trivial() {
    std::map<std::string, std::string> out;
    for (const auto& [s, p] : parent_) {
      const std::string root = find(s);
      if (root != s) out[s] = root;
    }
    return out;
  }

 private:
  std::map<std::string, std::string> parent_;
};

nlohmann::ordered_json number(double v) {
  if (std::nearbyint(v) == v && std::fabs(v) < 9007199254740992.0) return static_cast<std::int64_t>(v);
  return v;
}

nlohmann::ordered_json pair_list(const std::set<SymbolPair>& pairs) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

}  // namespace

IsingModel flatten_to_ising(const std::vector<ResolvedStatement>& statements) {
  IsingModel model;
  Aliases aliases;
  for (const auto& stmt : statements)
    if (const auto* r = std::get_if<ResolvedRelation>(&stmt); r && r->kind == RelationKind::Equiv) {
      aliases.unite(r->a, r->b);
      model.equivalences.insert(make_symbol_pair(r->a, r->b));
    }

  std::map<std::string, const ResolvedPin*> pin_sources;
  for (const auto& stmt : statements) {
    std::visit(overloaded{
                   [&](const ResolvedWeight& w) { model.h[aliases.find(w.symbol)] += w.value; },
                   [&](const ResolvedCoupling& c) {
                     const std::string a = aliases.find(c.a), b = aliases.find(c.b);
                     if (a == b)
                       throw DiagnosticError("SEM308",
                                             c.a == c.b ? "symbol '" + c.a + "' is coupled to itself"
                                                        : "coupling '" + c.a + "' to '" + c.b +
                                                              "' couples the equivalent symbol '" + a + "' to itself",
                                             c.span);
                     model.J[make_symbol_pair(a, b)] += c.value;
                   },
                   [&](const ResolvedRelation& r) {
                     if (r.kind == RelationKind::Equiv) return;
                     auto pair = make_symbol_pair(aliases.find(r.a), aliases.find(r.b));
                     (r.kind == RelationKind::Chain ? model.chains : model.antichains).insert(std::move(pair));
                   },
                   [&](const ResolvedPin& p) {
                     const std::string s = aliases.find(p.symbol);
                     const auto [it, fresh] = model.pins.emplace(s, p.value);
                     if (!fresh && it->second != p.value)
                       throw DiagnosticError("SEM309",
                                             "pin '" + p.symbol + " := " + (p.value ? "true" : "false") +
                                                 "' contradicts pin '" + pin_sources[s]->symbol + " := " +
                                                 (it->second ? "true" : "false") + "'",
                                             p.span);
                     if (fresh) pin_sources[s] = &p;
                   },
                   [](const Assertion&) {},
               },
               stmt);
  }
  model.aliases = aliases.non_trivial();
  return model;
}

double energy(const IsingModel& model, const SpinConfiguration& config) {
  const auto spin = [&](const std::string& s) {
    const auto it = config.find(s);
    if (it == config.end())
      throw DiagnosticError("SEM310", "configuration has no spin for '" + s + "'", frontend::Span{});
    if (it->second != 1 && it->second != -1)
      throw DiagnosticError("SEM310", "spin of '" + s + "' must be +1 or -1", frontend::Span{});
    return it->second;
  };
  for (const auto& s : model.symbols()) spin(s);
  double e = 0;
  for (const auto& [s, v] : model.h) e += v * spin(s);
  for (const auto& [p, v] : model.J) e += v * spin(p.first) * spin(p.second);
  return e;
}

std::string ising_to_json(const IsingModel& model) {
  nlohmann::ordered_json out;
  out["h"] = nlohmann::ordered_json::object();
  for (const auto& [s, v] : model.h) out["h"][s] = number(v);
  out["J"] = nlohmann::ordered_json::array();
  for (const auto& [p, v] : model.J) out["J"].push_back({p.first, p.second, number(v)});
  out["pins"] = nlohmann::ordered_json::object();
  for (const auto& [s, v] : model.pins) out["pins"][s] = v;
  out["chains"] = pair_list(model.chains);
  out["antichains"] = pair_list(model.antichains);
  out["equiv"] = pair_list(model.equivalences);
  return out.dump();
}

}  // namespace qparse::qmasm
