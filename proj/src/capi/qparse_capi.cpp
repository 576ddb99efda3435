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

#include <json.hpp>
#include <new>
#include <string>
#include <string_view>
#include <vector>

#include "blackbird/parser.hpp"
#include "frontend/ast.hpp"
#include "frontend/diagnostic.hpp"
#include "qasm/parser.hpp"
#include "qmasm/assertions.hpp"
#include "qmasm/elaborate.hpp"
#include "qmasm/ising.hpp"
#include "qmasm/parser.hpp"
#include "qmasm/solver.hpp"
#include "qparse/qparse.h"

struct qp_options {
  qp_format format = QP_FORMAT_JSON;
  int max_spins = qparse::qmasm::kDefaultMaxSpins;
  std::vector<std::filesystem::path> include_dirs;
};

struct qp_result {
  qp_status status = QP_OK;
  std::string output;
  std::string code;
  std::string message;
  unsigned line = 0;
  unsigned column = 0;
  std::string diagnostic;
  std::string error_json;
};

namespace {

using qparse::frontend::AstFormat;
using qparse::frontend::AstNode;
using qparse::frontend::DiagnosticError;

enum class Command { Parse, Check, Ising, Solve };

AstNode parse_to_ast(qp_language language, std::string_view source) {
  switch (language) {
    case QP_LANG_QASM: return qparse::qasm::to_ast(qparse::qasm::parse_qasm_string(source));
    case QP_LANG_BLACKBIRD: return qparse::blackbird::to_ast(qparse::blackbird::parse_blackbird_string(source));
    default: return qparse::qmasm::to_ast(qparse::qmasm::parse_qmasm_string(source));
  }
}

struct QmasmRun {
  std::vector<qparse::qmasm::ResolvedStatement> statements;
  qparse::qmasm::IsingModel model;
};

QmasmRun run_qmasm(std::string_view source, const qp_options& options) {
  using namespace qparse::qmasm;
  QmasmRun run;
  const Program program = parse_qmasm_string(source);
  run.statements = analyze(program, make_file_loader(options.include_dirs));
  run.model = flatten_to_ising(run.statements);
  require_assertions(check_assertions(run.statements, &run.model));
  return run;
}

std::string execute(Command command, qp_language language, std::string_view source, const qp_options& options) {
  switch (command) {
    case Command::Parse:
      return serialize_ast(parse_to_ast(language, source),
                           options.format == QP_FORMAT_PRETTY ? AstFormat::Pretty : AstFormat::Json);
    case Command::Check:
      if (language == QP_LANG_QMASM)
        run_qmasm(source, options);
      else
        parse_to_ast(language, source);
      return {};
    case Command::Ising: return qparse::qmasm::ising_to_json(run_qmasm(source, options).model);
    case Command::Solve: {
      const auto run = run_qmasm(source, options);
      return qparse::qmasm::result_to_json(qparse::qmasm::brute_force_ground_states(run.model, options.max_spins));
    }
  }
  return {};
}

void fail(qp_result& r, qp_status status, std::string code, std::string message) {
  r.status = status;
  r.output.clear();
  r.code = std::move(code);
  r.message = std::move(message);
  r.diagnostic = "error " + r.code + ": " + r.message + "\n";
  r.error_json = nlohmann::json{{"code", r.code}, {"message", r.message}, {"line", 0}, {"column", 0}}.dump();
}

qp_status run(Command command, qp_language language, const char* source, size_t length, const qp_options* options,
              qp_result** out) {
  if (out == nullptr) return QP_USAGE_ERROR;
  *out = new (std::nothrow) qp_result;
  if (*out == nullptr) return QP_INTERNAL_ERROR;
  qp_result& r = **out;
  if (language != QP_LANG_QASM && language != QP_LANG_BLACKBIRD && language != QP_LANG_QMASM) {
    fail(r, QP_USAGE_ERROR, "USAGE", "unknown language");
    return r.status;
  }
  if (source == nullptr && length > 0) {
    fail(r, QP_USAGE_ERROR, "USAGE", "source is NULL");
    return r.status;
  }
  const std::string_view text = source ? std::string_view(source, length) : std::string_view();
  const qp_options defaults;
  try {
    r.output = execute(command, language, text, options ? *options : defaults);
  } catch (const DiagnosticError& err) {
    const auto& d = err.diagnostic();
    r.status = d.code.rfind("SEM", 0) == 0 ? QP_SEMANTIC_ERROR : QP_SYNTAX_ERROR;
    r.output.clear();
    r.code = d.code;
    r.message = d.message;
    r.line = d.span.start.line;
    r.column = d.span.start.column;
    r.diagnostic = qparse::frontend::render_diagnostic(d, text);
    r.error_json =
        nlohmann::json{{"code", r.code}, {"message", r.message}, {"line", r.line}, {"column", r.column}}.dump();
  } catch (const std::bad_alloc&) {
    fail(r, QP_INTERNAL_ERROR, "INTERNAL", "out of memory");
  } catch (const std::exception& e) {
    fail(r, QP_INTERNAL_ERROR, "INTERNAL", e.what());
  }
  return r.status;
}

const char* or_empty(const qp_result* r, const std::string qp_result::*field) {
  return r ? (r->*field).c_str() : "";
}

}  // namespace

extern "C" {

const char* qp_version(void) { return QPARSE_VERSION_STRING; }

qp_language qp_language_from_name(const char* name) {
  if (name == nullptr) return QP_LANG_UNKNOWN;
  const std::string_view n(name);
  if (n == "qasm") return QP_LANG_QASM;
  if (n == "blackbird") return QP_LANG_BLACKBIRD;
  if (n == "qmasm") return QP_LANG_QMASM;
  return QP_LANG_UNKNOWN;
}

const char* qp_language_name(qp_language language) {
  switch (language) {
    case QP_LANG_QASM: return "qasm";
    case QP_LANG_BLACKBIRD: return "blackbird";
    case QP_LANG_QMASM: return "qmasm";
    default: return "";
  }
}

qp_options* qp_options_new(void) { return new (std::nothrow) qp_options; }

void qp_options_free(qp_options* options) { delete options; }

qp_status qp_options_set_format(qp_options* options, qp_format format) {
  if (options == nullptr || (format != QP_FORMAT_JSON && format != QP_FORMAT_PRETTY)) return QP_USAGE_ERROR;
  options->format = format;
  return QP_OK;
}

qp_status qp_options_set_max_spins(qp_options* options, int max_spins) {
  if (options == nullptr || max_spins < 0 || max_spins > 63) return QP_USAGE_ERROR;
  options->max_spins = max_spins;
  return QP_OK;
}

qp_status qp_options_add_include_dir(qp_options* options, const char* directory) {
  if (options == nullptr || directory == nullptr) return QP_USAGE_ERROR;
  try {
    options->include_dirs.emplace_back(directory);
  } catch (...) {
    return QP_INTERNAL_ERROR;
  }
  return QP_OK;
}

qp_status qp_parse(qp_language language, const char* source, size_t length, const qp_options* options,
                   qp_result** out) {
  return run(Command::Parse, language, source, length, options, out);
}

qp_status qp_check(qp_language language, const char* source, size_t length, const qp_options* options,
                   qp_result** out) {
  return run(Command::Check, language, source, length, options, out);
}

qp_status qp_ising(const char* source, size_t length, const qp_options* options, qp_result** out) {
  return run(Command::Ising, QP_LANG_QMASM, source, length, options, out);
}

qp_status qp_solve(const char* source, size_t length, const qp_options* options, qp_result** out) {
  return run(Command::Solve, QP_LANG_QMASM, source, length, options, out);
}

qp_status qp_result_status(const qp_result* result) { return result ? result->status : QP_USAGE_ERROR; }
const char* qp_result_output(const qp_result* result) { return or_empty(result, &qp_result::output); }
size_t qp_result_output_length(const qp_result* result) { return result ? result->output.size() : 0; }
const char* qp_result_error_code(const qp_result* result) { return or_empty(result, &qp_result::code); }
const char* qp_result_error_message(const qp_result* result) { return or_empty(result, &qp_result::message); }
unsigned qp_result_error_line(const qp_result* result) { return result ? result->line : 0; }
unsigned qp_result_error_column(const qp_result* result) { return result ? result->column : 0; }
const char* qp_result_diagnostic(const qp_result* result) { return or_empty(result, &qp_result::diagnostic); }
const char* qp_result_error_json(const qp_result* result) { return or_empty(result, &qp_result::error_json); }
void qp_result_free(qp_result* result) { delete result; }

}  // extern "C"
