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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when everything passes).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "blackbird/ast.hpp"
#include "blackbird/lexer.hpp"
#include "blackbird/operators.hpp"
#include "blackbird/parser.hpp"
#include "bridge.hpp"
#include "corpus.hpp"
#include "frontend/diagnostic.hpp"
#include "generators.hpp"
#include "oracles.hpp"
#include "qasm/ast.hpp"
#include "qasm/gates.hpp"
#include "qasm/lexer.hpp"
#include "qasm/parser.hpp"
#include "qmasm/ast.hpp"
#include "qmasm/elaborate.hpp"
#include "qmasm/includes.hpp"
#include "qmasm/ising.hpp"
#include "qmasm/lexer.hpp"
#include "qmasm/macros.hpp"
#include "qmasm/parser.hpp"
#include "qmasm/qubo.hpp"
#include "qmasm/solver.hpp"

using namespace qparse;
using frontend::structurally_equal;

namespace {

// Pinned tolerances.
constexpr double kEnergyTolerance = 1e-12;
constexpr double kGroundTolerance = 1e-9;
constexpr double kQuboTolerance = 1e-12;
constexpr double kFastSeconds = 1.0;
constexpr double kIsingSeconds = 10.0;
constexpr int kGeneratedExpressions = 1000;
constexpr int kExpressionDepth = 6;  // nodes on the longest root-to-leaf path

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

/// Error code thrown by `fn`, "ok" if none.
std::string code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const frontend::DiagnosticError& e) {
    return e.diagnostic().code;
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
  return "ok";
}

int depth(const frontend::Expr& e) {
  int d = 0;
  for (const auto& op : e.operands) d = std::max(d, depth(op));
  return d + 1;
}

// ---------------------------------------------------------------------------

std::string qasm_application(std::string_view name, int params, int qubits) {
  std::string line(name);
  if (params > 0) {
    line += "(";
    for (int i = 0; i < params; ++i) line += (i ? ", " : "") + std::to_string(0.1 * (i + 1)) + " * pi";
    line += ")";
  }
  for (int i = 0; i < qubits; ++i) line += (i ? ", q[" : " q[") + std::to_string(i) + "]";
  return line + ";\n";
}

Outcome gate_coverage() {
  const std::string header = "OPENQASM 2.0;\nqreg q[4];\n";
  const auto start = Clock::now();
  std::string program = header;
  for (const auto& g : qasm::builtin_gates()) program += qasm_application(g.name, g.param_count, g.qubit_count);
  std::size_t statements = 0;
  const auto ok = code_of([&] { statements = qasm::parse_qasm_string(program).statements.size() - 1; });  // qreg
  if (ok != "ok") return {false, "valid program failed with " + ok};

  int variants = 0;
  std::vector<std::string> wrong;
  for (const auto& g : qasm::builtin_gates()) {
    const std::pair<int, int> shapes[] = {{g.param_count - 1, g.qubit_count},
                                          {g.param_count + 1, g.qubit_count},
                                          {g.param_count, g.qubit_count - 1},
                                          {g.param_count, g.qubit_count + 1}};
    for (const auto& [p, q] : shapes) {
      if (p < 0 || q < 0) continue;
      ++variants;
      const auto text = qasm_application(g.name, p, q);
      if (code_of([&] { qasm::parse_qasm_string(header + text); }) != "PAR103") wrong.push_back(text);
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << qasm::builtin_gates().size() << " gates -> " << statements << " statements; " << variants
    << " off-by-one variants, " << wrong.size() << " not PAR103; " << fmt_seconds(elapsed);
  if (!wrong.empty()) d << "; first: " << wrong.front();
  return {qasm::builtin_gates().size() == 19 && statements == 19 && wrong.empty() && elapsed < kFastSeconds, d.str()};
}

// ---------------------------------------------------------------------------

std::string blackbird_statement(const blackbird::OperatorSignature& op) {
  if (op.takes_matrix) return std::string(op.name) + (op.name == "Interferometer" ? "(U)" : "(S)") + " | (0, 1)\n";
  std::string line(op.name);
  if (op.min_args > 0) {
    line += "(";
    for (int i = 0; i < op.min_args; ++i) line += (i ? ", " : "") + std::to_string(0.25 * (i + 1));
    line += ")";
  }
  line += op.mode_count == 1 ? " | 0" : " | (0, 1)";
  return line + "\n";
}

Outcome operator_coverage() {
  const auto start = Clock::now();
  std::string program =
      "name coverage\nversion 1.0\n\n"
      "complex array U =\n    1, 0\n    0, 1\n"
      "float array S =\n    1, 0, 0, 0\n    0, 1, 0, 0\n    0, 0, 1, 0\n    0, 0, 0, 1\n\n";
  for (const auto& op : blackbird::operator_table()) program += blackbird_statement(op);
  std::size_t statements = 0;
  const auto ok = code_of([&] { statements = blackbird::parse_blackbird_string(program).statements.size(); });
  if (ok != "ok") return {false, "valid program failed with " + ok};

  std::set<std::string> unknown = {"BSgat", "Foo", "Measure", "MeasureFock", "gate", "vac", "XGate", "Fouriergates"};
  for (const auto& op : blackbird::operator_table()) {
    std::string name(op.name);
    unknown.insert(name + "X");
    unknown.insert(name.substr(0, name.size() - 1));
    std::string lower = name;
    lower[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(lower[0])));
    unknown.insert(lower);
  }
  std::erase_if(unknown, [](const std::string& n) { return blackbird::find_operator(n).has_value(); });
  std::vector<std::string> wrong;
  for (const auto& name : unknown)
    if (code_of([&] { blackbird::parse_blackbird_string(name + "(0.5) | 0\n"); }) != "PAR203") wrong.push_back(name);

  int gates = 0, preps = 0;
  for (const auto& op : blackbird::operator_table()) (op.op_class == blackbird::OperatorClass::Gate ? gates : preps)++;
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << gates << " operators + " << preps << " preparations -> " << statements << " statements; " << unknown.size()
    << " unknown heads, " << wrong.size() << " not PAR203; " << fmt_seconds(elapsed);
  if (!wrong.empty()) d << "; first: " << wrong.front();
  return {gates == 17 && preps == 7 && statements == 24 && wrong.empty() && elapsed < kFastSeconds, d.str()};
}

// ---------------------------------------------------------------------------

Outcome lookahead() {
  const auto pow = blackbird::lex_blackbird("a**b");
  const auto mul = blackbird::lex_blackbird("a*b");
  const bool bb = pow.size() == 3 && mul.size() == 3 && pow[1].kind == blackbird::TokenKind::Power &&
                  pow[1].lexeme == "**" && mul[1].kind == blackbird::TokenKind::Times;
  const auto qpow = qmasm::lex_qmasm("a**b");
  const auto qmul = qmasm::lex_qmasm("a*b");
  const bool qm = qpow.size() == 3 && qmul.size() == 3 && qpow[1].kind == qmasm::TokenKind::Power &&
                  qpow[1].lexeme == "**" && qmul[1].kind == qmasm::TokenKind::Times;
  std::ostringstream d;
  d << "blackbird a**b -> " << pow.size() << " tokens, a*b -> " << mul.size() << " tokens, power lexeme '"
    << (pow.size() > 1 ? pow[1].lexeme : "") << "'; qmasm " << qpow.size() << "/" << qmul.size();
  return {bb && qm, d.str()};
}

// ---------------------------------------------------------------------------

template <typename Lex>
std::pair<int, std::vector<std::string>> reconstruct_all(const std::string& lang, Lex lex) {
  int n = 0;
  std::vector<std::string> bad;
  for (const auto& path : corpus::files(lang)) {
    ++n;
    const auto src = corpus::read(path);
    std::string rebuilt;
    const auto code = code_of([&] { rebuilt = lex(src).reconstruct(); });
    if (code != "ok" || rebuilt != src) bad.push_back(path.filename().string());
  }
  return {n, bad};
}

Outcome reconstruction() {
  const auto q = reconstruct_all("qasm", qasm::lex_qasm);
  const auto b = reconstruct_all("blackbird", blackbird::lex_blackbird);
  const auto m = reconstruct_all("qmasm", qmasm::lex_qmasm);
  std::ostringstream d;
  d << "qasm " << q.first << ", blackbird " << b.first << ", qmasm " << m.first << " files; mismatches "
    << q.second.size() + b.second.size() + m.second.size();
  for (const auto* bad : {&q.second, &b.second, &m.second})
    for (const auto& f : *bad) d << " " << f;
  const bool enough = q.first >= 10 && b.first >= 10 && m.first >= 10;
  return {enough && q.second.empty() && b.second.empty() && m.second.empty(), d.str()};
}

// ---------------------------------------------------------------------------

template <typename Parse, typename ToAst, typename Print>
int corpus_round_trip(const std::string& lang, Parse parse, ToAst to_ast, Print print,
                      std::vector<std::string>& bad) {
  int n = 0;
  for (const auto& path : corpus::files(lang)) {
    ++n;
    bool same = false;
    const auto code = code_of([&] {
      const auto program = parse(corpus::read(path));
      same = structurally_equal(to_ast(program), to_ast(parse(print(program))));
    });
    if (code != "ok" || !same) bad.push_back(lang + "/" + path.filename().string() + (code != "ok" ? " " + code : ""));
  }
  return n;
}

template <typename Parse, typename Print>
int expression_round_trip(gen::Lang lang, std::uint64_t seed, Parse parse, Print print, std::vector<std::string>& bad,
                          int& deepest) {
  std::mt19937_64 rng(seed);
  int n = 0;
  for (int i = 0; i < kGeneratedExpressions; ++i) {
    const auto e = gen::expression(rng, lang, kExpressionDepth - 1);
    deepest = std::max(deepest, depth(e));
    ++n;
    std::string text;
    bool same = false;
    const auto code = code_of([&] {
      text = print(e);
      same = structurally_equal(frontend::to_ast(e), frontend::to_ast(parse(text)));
    });
    if (code != "ok" || !same) bad.push_back(text + (code != "ok" ? " " + code : ""));
  }
  return n;
}

Outcome round_trip() {
  std::vector<std::string> bad;
  int files = 0;
  files += corpus_round_trip(
      "qasm", [](const std::string& s) { return qasm::parse_qasm_string(s); },
      [](const qasm::Program& p) { return qasm::to_ast(p); }, [](const qasm::Program& p) { return qasm::print_program(p); },
      bad);
  files += corpus_round_trip(
      "blackbird", [](const std::string& s) { return blackbird::parse_blackbird_string(s); },
      [](const blackbird::Program& p) { return blackbird::to_ast(p); },
      [](const blackbird::Program& p) { return blackbird::print_program(p); }, bad);
  files += corpus_round_trip(
      "qmasm", [](const std::string& s) { return qmasm::parse_qmasm_string(s); },
      [](const qmasm::Program& p) { return qmasm::to_ast(p); },
      [](const qmasm::Program& p) { return qmasm::print_program(p); }, bad);

  int exprs = 0, deepest = 0;
  exprs += expression_round_trip(
      gen::Lang::Qasm, 101, [](const std::string& s) { return qasm::parse_qasm_expression(qasm::lex_qasm(s)); },
      [](const frontend::Expr& e) { return qasm::print_expression(e); }, bad, deepest);
  exprs += expression_round_trip(
      gen::Lang::Blackbird, 202,
      [](const std::string& s) { return blackbird::parse_expression(blackbird::lex_blackbird(s)); },
      [](const frontend::Expr& e) { return blackbird::print_expression(e); }, bad, deepest);
  exprs += expression_round_trip(
      gen::Lang::Qmasm, 303, [](const std::string& s) { return qmasm::parse_qmasm_expression(qmasm::lex_qmasm(s)); },
      [](const frontend::Expr& e) { return qmasm::print_expression(e); }, bad, deepest);

  std::ostringstream d;
  d << files << " corpus files, " << exprs << " generated expressions (max depth " << deepest << "); " << bad.size()
    << " mismatches";
  if (!bad.empty()) d << "; first: " << bad.front();
  return {bad.empty() && deepest <= kExpressionDepth && exprs == 3 * kGeneratedExpressions, d.str()};
}

// ---------------------------------------------------------------------------

bool mentions_next(const qmasm::Statement& s) {
  return std::visit(
      [](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, qmasm::Weight>) return n.symbol.starts_with("!next.");
        if constexpr (std::is_same_v<T, qmasm::Coupling> || std::is_same_v<T, qmasm::Relation>)
          return n.a.starts_with("!next.") || n.b.starts_with("!next.");
        if constexpr (std::is_same_v<T, qmasm::Pin>) return n.symbol.starts_with("!next.");
        return false;
      },
      s.node);
}

Outcome qmasm_checklist() {
  const auto dir = corpus::root() / "qmasm";
  const auto loader = qmasm::make_file_loader({dir});
  qmasm::Program program;
  const auto code = code_of([&] { program = qmasm::parse_qmasm_string(corpus::read(dir / "checklist.qmasm")); });
  if (code != "ok") return {false, "checklist failed to parse: " + code};

  std::set<std::string> seen;
  std::vector<const qmasm::MacroDef*> defs;
  for (const auto& s : program.statements) {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, qmasm::Weight>) seen.insert("weight");
          if constexpr (std::is_same_v<T, qmasm::Coupling>) seen.insert("coupling");
          if constexpr (std::is_same_v<T, qmasm::Relation>) seen.insert(std::string(qmasm::to_string(n.kind)));
          if constexpr (std::is_same_v<T, qmasm::Pin>) seen.insert("pin");
          if constexpr (std::is_same_v<T, qmasm::MacroDef>) {
            seen.insert("macro");
            defs.push_back(&n);
            for (const auto& b : n.body)
              if (mentions_next(b)) seen.insert("next");
          }
          if constexpr (std::is_same_v<T, qmasm::UseMacro>) seen.insert("use_macro");
          if constexpr (std::is_same_v<T, qmasm::Include>) seen.insert("include");
          if constexpr (std::is_same_v<T, qmasm::Assert>) seen.insert("assert");
          if constexpr (std::is_same_v<T, qmasm::ForLoop>) seen.insert("for");
          if constexpr (std::is_same_v<T, qmasm::IfElse>)
            if (n.else_body) seen.insert("if_else");
          if constexpr (std::is_same_v<T, qmasm::Let>) seen.insert("let");
        },
        s.node);
  }
  const std::set<std::string> required = {"weight", "coupling", "Chain",   "AntiChain", "Equiv", "pin",
                                          "macro",  "use_macro", "next",   "include",   "assert", "for",
                                          "if_else", "let"};
  std::vector<std::string> missing;
  std::set_difference(required.begin(), required.end(), seen.begin(), seen.end(), std::back_inserter(missing));

  const auto pipeline = code_of([&] { qmasm::flatten_to_ising(qmasm::analyze(program, loader)); });

  // Expansion count for every macro the checklist defines or includes.
  std::vector<qmasm::MacroDef> all;
  for (const auto* d : defs) all.push_back(*d);
  for (const auto& s : qmasm::resolve_includes(program, loader).statements)
    if (const auto* d = std::get_if<qmasm::MacroDef>(&s.node))
      if (std::none_of(all.begin(), all.end(), [&](const auto& x) { return x.name == d->name; })) all.push_back(*d);

  std::ostringstream counts;
  bool counts_ok = true;
  for (const auto& def : all) {
    const std::size_t b = def.body.size();
    const std::size_t b_next = std::count_if(def.body.begin(), def.body.end(), mentions_next);
    for (std::size_t k = 2; k <= 4; ++k) {
      qmasm::Program p;
      p.statements.push_back(qmasm::Statement{def});
      qmasm::UseMacro use;
      use.macro = def.name;
      for (std::size_t i = 0; i < k; ++i) use.instances.push_back(qmasm::Instance{"i" + std::to_string(i), {}});
      p.statements.push_back(qmasm::Statement{use});
      const std::size_t got = qmasm::expand_macros(p).size();
      // Statements that reach into the next instance have no partner in the
      // last one and are dropped there.
      const std::size_t want = k * b - b_next;
      if (got != want) counts_ok = false;
      if (k == 3) counts << " " << def.name << ":k=3,b=" << b << (b_next ? ",next=" + std::to_string(b_next) : "") << "->" << got;
    }
  }

  std::ostringstream d;
  d << seen.size() << " feature kinds seen";
  if (!missing.empty()) {
    d << ", missing";
    for (const auto& m : missing) d << " " << m;
  }
  d << "; pipeline " << pipeline << ";" << counts.str();
  return {missing.empty() && pipeline == "ok" && counts_ok && all.size() >= 3, d.str()};
}

// ---------------------------------------------------------------------------

Outcome ising_correctness() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20240601);
  int models = 0, energy_bad = 0, ground_bad = 0;
  double worst = 0;
  for (; models < 100; ++models) {
    const int n = 1 + gen::pick(rng, 10);
    const auto m = gen::ising(rng, n);
    const auto dense = bridge::to_dense(m);
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
      std::vector<int> s(n);
      for (int i = 0; i < n; ++i) s[i] = (c >> i) & 1 ? 1 : -1;
      const double diff = std::fabs(qmasm::energy(m, bridge::to_config(dense, s)) - oracle::energy(dense, s));
      worst = std::max(worst, diff);
      if (diff > kEnergyTolerance) ++energy_bad;
    }
    if (!bridge::same_ground_states(qmasm::brute_force_ground_states(m), oracle::ground_states(dense, kGroundTolerance),
                                    dense, kGroundTolerance))
      ++ground_bad;
  }
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << models << " models; energy mismatches " << energy_bad << " (max |diff| " << worst << "); ground-set mismatches "
    << ground_bad << "; " << fmt_seconds(elapsed);
  return {energy_bad == 0 && ground_bad == 0 && elapsed < kIsingSeconds, d.str()};
}

// ---------------------------------------------------------------------------

std::string describe(const qmasm::GroundStateResult& r) {
  std::ostringstream d;
  d << "E=" << r.min_energy << " {";
  for (std::size_t k = 0; k < r.states.size(); ++k) {
    const auto c = r.configuration(k);
    d << (k ? ", " : "") << "(" << (c.at("a") > 0 ? "+1" : "-1") << "," << (c.at("b") > 0 ? "+1" : "-1") << ")";
  }
  return d.str() + "}";
}

Outcome constraint_semantics() {
  auto solve = [](std::string_view src) {
    const auto program = qmasm::parse_qmasm_string(src);
    return qmasm::brute_force_ground_states(
        qmasm::flatten_to_ising(qmasm::analyze(program, [](std::string_view) { return std::nullopt; })));
  };
  using Set = std::set<std::pair<int, int>>;
  auto set_of = [](const qmasm::GroundStateResult& r) {
    Set s;
    for (std::size_t k = 0; k < r.states.size(); ++k) {
      const auto c = r.configuration(k);
      s.emplace(c.at("a"), c.at("b"));
    }
    return s;
  };
  const auto ferro = solve("a b -1\n");
  const auto pinned = solve("a b -1\na := true\n");
  const auto anti = solve("a b -1\na /= b\n");
  const bool ok = ferro.min_energy == -1 && set_of(ferro) == Set{{1, 1}, {-1, -1}} && pinned.min_energy == -1 &&
                  set_of(pinned) == Set{{1, 1}} && anti.min_energy == 1 && set_of(anti) == Set{{1, -1}, {-1, 1}};
  return {ok, "ferromagnet " + describe(ferro) + "; pin " + describe(pinned) + "; anti-chain " + describe(anti)};
}

// ---------------------------------------------------------------------------

Outcome qubo_equivalence() {
  std::mt19937_64 rng(77);
  int models = 0, energy_bad = 0, round_trip_bad = 0;
  for (; models < 50; ++models) {
    const auto m = gen::ising(rng, 1 + gen::pick(rng, 8));
    if (!bridge::qubo_matches_everywhere(m, kQuboTolerance)) ++energy_bad;
    if (!bridge::qubo_round_trip_exact(m)) ++round_trip_bad;
  }
  std::ostringstream d;
  d << models << " models; energy mismatches " << energy_bad << "; inexact round trips " << round_trip_bad;
  return {energy_bad == 0 && round_trip_bad == 0, d.str()};
}

// ---------------------------------------------------------------------------

Outcome throughput() {
  std::string program = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[16];\ncreg c[16];\n";
  int lines = 4;
  std::mt19937_64 rng(9);
  const auto gates = qasm::builtin_gates();
  while (lines < 10000) {
    const auto& g = gates[gen::pick(rng, static_cast<int>(gates.size()))];
    std::string line(g.name);
    if (g.param_count > 0) {
      line += "(";
      for (int i = 0; i < g.param_count; ++i) line += (i ? ", -pi/" : "pi/") + std::to_string(2 + i);
      line += ")";
    }
    std::vector<int> qubits;
    while (static_cast<int>(qubits.size()) < g.qubit_count) {
      const int q = gen::pick(rng, 16);
      if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) qubits.push_back(q);
    }
    for (std::size_t i = 0; i < qubits.size(); ++i) line += (i ? ", q[" : " q[") + std::to_string(qubits[i]) + "]";
    program += line + ";  // step " + std::to_string(lines) + "\n";
    ++lines;
  }
  const auto start = Clock::now();
  std::size_t statements = 0;
  const auto code = code_of([&] { statements = qasm::parse_qasm_string(program).statements.size(); });
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << lines << " lines (" << program.size() << " bytes) -> " << statements << " statements in "
    << fmt_seconds(elapsed);
  if (code != "ok") d << "; " << code;
  return {code == "ok" && elapsed < kFastSeconds, d.str()};
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"gate-coverage", gate_coverage},
      {"operator-coverage", operator_coverage},
      {"lookahead", lookahead},
      {"reconstruction", reconstruction},
      {"round-trip", round_trip},
      {"qmasm-checklist", qmasm_checklist},
      {"ising-correctness", ising_correctness},
      {"constraint-semantics", constraint_semantics},
      {"qubo-equivalence", qubo_equivalence},
      {"throughput", throughput},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("uncaught exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %-22s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed;
}
