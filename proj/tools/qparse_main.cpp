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

// qparse: parse, check, flatten and solve QASM, Blackbird and QMASM programs.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qparse/qparse.h"

namespace {

struct Invocation {
  std::string command;
  std::string lang;
  std::string format = "json";
  int max_spins = 24;
  std::vector<std::string> include_dirs;
  std::string input;
};

std::optional<std::string> read_input(const std::string& input) {
  if (input == "-") {
    std::ostringstream text;
    text << std::cin.rdbuf();
    if (std::cin.bad()) return std::nullopt;
    return text.str();
  }
  std::error_code ec;
  if (!std::filesystem::is_regular_file(input, ec)) return std::nullopt;
  std::ifstream in(input, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

qp_language language_for(const Invocation& inv) {
  if (!inv.lang.empty()) return qp_language_from_name(inv.lang.c_str());
  if (inv.command == "ising" || inv.command == "solve") return QP_LANG_QMASM;
  if (inv.input == "-") return QP_LANG_UNKNOWN;
  const std::string ext = std::filesystem::path(inv.input).extension().string();
  if (ext == ".qasm") return QP_LANG_QASM;
  if (ext == ".xbb") return QP_LANG_BLACKBIRD;
  if (ext == ".qmasm") return QP_LANG_QMASM;
  return QP_LANG_UNKNOWN;
}

int usage_error(const std::string& message) {
  std::cerr << "error USAGE: " << message << "\n";
  return QP_USAGE_ERROR;
}

int run(const Invocation& inv) {
  const qp_language lang = language_for(inv);
  if (lang == QP_LANG_UNKNOWN)
    return usage_error(inv.lang.empty() ? "cannot infer the language of '" + inv.input + "'; pass --lang"
                                        : "unknown language '" + inv.lang + "'");
  if ((inv.command == "ising" || inv.command == "solve") && lang != QP_LANG_QMASM)
    return usage_error("'" + inv.command + "' only applies to qmasm programs");

  const auto source = read_input(inv.input);
  if (!source) {
    std::cerr << "error IO: cannot read '" << inv.input << "'\n";
    return QP_IO_ERROR;
  }

  std::unique_ptr<qp_options, decltype(&qp_options_free)> options(qp_options_new(), qp_options_free);
  qp_options_set_format(options.get(), inv.format == "pretty" ? QP_FORMAT_PRETTY : QP_FORMAT_JSON);
  if (qp_options_set_max_spins(options.get(), inv.max_spins) != QP_OK)
    return usage_error("--max-spins must be between 0 and 63");
  for (const auto& dir : inv.include_dirs) qp_options_add_include_dir(options.get(), dir.c_str());
  const std::filesystem::path base =
      inv.input == "-" ? std::filesystem::path(".") : std::filesystem::path(inv.input).parent_path();
  qp_options_add_include_dir(options.get(), base.empty() ? "." : base.c_str());

  qp_result* raw = nullptr;
  if (inv.command == "parse")
    qp_parse(lang, source->data(), source->size(), options.get(), &raw);
  else if (inv.command == "check")
    qp_check(lang, source->data(), source->size(), options.get(), &raw);
  else if (inv.command == "ising")
    qp_ising(source->data(), source->size(), options.get(), &raw);
  else
    qp_solve(source->data(), source->size(), options.get(), &raw);
  std::unique_ptr<qp_result, decltype(&qp_result_free)> result(raw, qp_result_free);
  if (!result) return QP_INTERNAL_ERROR;

  const qp_status status = qp_result_status(result.get());
  if (status != QP_OK) {
    std::cerr << qp_result_diagnostic(result.get());
    return status;
  }
  const std::string_view out(qp_result_output(result.get()), qp_result_output_length(result.get()));
  std::cout << out;
  if (!out.empty() && out.back() != '\n') std::cout << '\n';
  std::cout.flush();
  return std::cout ? QP_OK : QP_IO_ERROR;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parse QASM, Blackbird and QMASM programs; flatten and solve QMASM."};
  app.set_version_flag("--version", std::string(qp_version()));
  app.require_subcommand(1);
  Invocation inv;

  const auto add_common = [&](CLI::App* sub, bool with_format) {
    sub->add_option("--lang", inv.lang, "qasm, blackbird or qmasm (default: from the file extension)")
        ->check(CLI::IsMember({"qasm", "blackbird", "qmasm"}));
    if (with_format)
      sub->add_option("--format", inv.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
    sub->add_option("--include-dir", inv.include_dirs, "QMASM include directory (repeatable, searched in order)")
        ->allow_extra_args(false);
    sub->add_option("input", inv.input, "input file, or - for standard input")->required();
  };
  add_common(app.add_subcommand("parse", "print the AST"), true);
  add_common(app.add_subcommand("check", "parse and validate, print nothing"), false);
  add_common(app.add_subcommand("ising", "print the flattened Ising model of a QMASM program"), false);
  auto* solve = app.add_subcommand("solve", "print the exact ground states of a QMASM program");
  add_common(solve, false);
  solve->add_option("--max-spins", inv.max_spins, "largest model the exact solver accepts")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return QP_USAGE_ERROR;
  }
  for (auto* sub : app.get_subcommands()) inv.command = sub->get_name();
  return run(inv);
}
