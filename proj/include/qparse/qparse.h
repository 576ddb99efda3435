/* Copyright 2026 The qparse Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef QPARSE_QPARSE_H_
#define QPARSE_QPARSE_H_

#include <stddef.h>

#if defined(QPARSE_BUILDING_LIBRARY)
#define QPARSE_API __attribute__((visibility("default")))
#else
#define QPARSE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes double as the command-line exit codes. */
typedef enum qp_status {
  QP_OK = 0,
  QP_SYNTAX_ERROR = 1,   /* LEX* and PAR* diagnostics */
  QP_SEMANTIC_ERROR = 2, /* SEM* diagnostics */
  QP_USAGE_ERROR = 3,
  QP_IO_ERROR = 4,
  QP_INTERNAL_ERROR = 5
} qp_status;

typedef enum qp_language {
  QP_LANG_UNKNOWN = -1,
  QP_LANG_QASM = 0,
  QP_LANG_BLACKBIRD = 1,
  QP_LANG_QMASM = 2
} qp_language;

typedef enum qp_format { QP_FORMAT_JSON = 0, QP_FORMAT_PRETTY = 1 } qp_format;

typedef struct qp_options qp_options;
typedef struct qp_result qp_result;

QPARSE_API const char* qp_version(void);

/* "qasm", "blackbird" or "qmasm"; QP_LANG_UNKNOWN otherwise. */
QPARSE_API qp_language qp_language_from_name(const char* name);
QPARSE_API const char* qp_language_name(qp_language language);

/* Options default to JSON output, 24 spins and no include directories. */
QPARSE_API qp_options* qp_options_new(void);
QPARSE_API void qp_options_free(qp_options* options);
QPARSE_API qp_status qp_options_set_format(qp_options* options, qp_format format);
QPARSE_API qp_status qp_options_set_max_spins(qp_options* options, int max_spins);
/* QMASM `!include` search path; directories are tried in the order added. */
QPARSE_API qp_status qp_options_add_include_dir(qp_options* options, const char* directory);

/*
 * Each entry point reads `length` bytes of `source` and stores a new result
 * in *out (also on failure, so the diagnostic can be read). `options` may be
 * NULL. The returned status equals qp_result_status(*out), or
 * QP_USAGE_ERROR without a result when `out` is NULL.
 */

/* AST of the program in the requested format. */
QPARSE_API qp_status qp_parse(qp_language language, const char* source, size_t length, const qp_options* options,
                              qp_result** out);
/* Parse plus semantic validation; QMASM runs through elaboration and its
 * assertions. Output is empty. */
QPARSE_API qp_status qp_check(qp_language language, const char* source, size_t length, const qp_options* options,
                              qp_result** out);
/* QMASM only: the flattened Ising model as JSON. */
QPARSE_API qp_status qp_ising(const char* source, size_t length, const qp_options* options, qp_result** out);
/* QMASM only: exact ground states as JSON. */
QPARSE_API qp_status qp_solve(const char* source, size_t length, const qp_options* options, qp_result** out);

QPARSE_API qp_status qp_result_status(const qp_result* result);
/* NUL-terminated artifact text; "" when there is none. */
QPARSE_API const char* qp_result_output(const qp_result* result);
QPARSE_API size_t qp_result_output_length(const qp_result* result);
/* Diagnostic fields; empty strings and zeros on success. */
QPARSE_API const char* qp_result_error_code(const qp_result* result);
QPARSE_API const char* qp_result_error_message(const qp_result* result);
QPARSE_API unsigned qp_result_error_line(const qp_result* result);
QPARSE_API unsigned qp_result_error_column(const qp_result* result);
/* Header, source line and caret line, ready to print. */
QPARSE_API const char* qp_result_diagnostic(const qp_result* result);
/* {"code":..,"message":..,"line":..,"column":..}, or "" on success. */
QPARSE_API const char* qp_result_error_json(const qp_result* result);
QPARSE_API void qp_result_free(qp_result* result);

#ifdef __cplusplus
}
#endif

#endif /* QPARSE_QPARSE_H_ */
