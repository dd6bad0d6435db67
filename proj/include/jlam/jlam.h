/*
 * Copyright (C) 2026 The jlam Authors
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

/* C interface to the jlam library.
 *
 * Every object is an opaque handle created by a jlam_*_X function that
 * returns a jlam_status and released with the matching *_free function.
 * On failure the out-parameter is left NULL and jlam_last_error() returns a
 * message for the calling thread. Strings returned through `char **` are
 * owned by the caller and released with jlam_string_free(). Strings returned
 * as `const char *` live as long as the handle they came from.
 *
 * Locations are 0-based; end locations are inclusive. Columns count UTF-8
 * code points. */

#ifndef JLAM_H
#define JLAM_H

#include <stddef.h>
#include <stdint.h>

#if defined(JLAM_BUILDING_LIBRARY)
#define JLAM_API __attribute__((visibility("default")))
#else
#define JLAM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum jlam_status {
  JLAM_OK = 0,
  JLAM_NO_ARROW,
  JLAM_MALFORMED_HEAD,
  JLAM_UNBALANCED_DELIMITERS,
  JLAM_MISSING_BODY,
  JLAM_MULTI_STATEMENT_BODY,
  JLAM_NESTED_LAMBDA_BODY,
  JLAM_EMPTY_BODY,
  JLAM_UNSUPPORTED_STATEMENT,
  JLAM_MALFORMED_PATCH,
  JLAM_INVALID_LEXICON,
  JLAM_IO,
  JLAM_INVALID_ARGUMENT,
  JLAM_INTERNAL
} jlam_status;

typedef enum jlam_format { JLAM_FORMAT_TEXT = 0, JLAM_FORMAT_JSON, JLAM_FORMAT_CSV } jlam_format;

JLAM_API const char *jlam_version(void);
/* "Ok", "NoArrow", "MalformedHead", ... */
JLAM_API const char *jlam_status_name(jlam_status status);
/* Non-zero for the statuses of a well-formed lambda whose body the
 * documentation generator does not handle. */
JLAM_API int jlam_status_is_unsupported(jlam_status status);
/* Message of the last failure on this thread, "" if none. */
JLAM_API const char *jlam_last_error(void);
JLAM_API void jlam_string_free(char *s);
/* Parses "text", "json" or "csv". */
JLAM_API jlam_status jlam_format_parse(const char *name, jlam_format *out);

/* ---- documentation ----------------------------------------------------- */

typedef struct jlam_lexicon jlam_lexicon;

JLAM_API jlam_status jlam_lexicon_builtin(jlam_lexicon **out);
/* Built-in entries overridden by a file of name<TAB>phrase lines. */
JLAM_API jlam_status jlam_lexicon_load(const char *path, jlam_lexicon **out);
JLAM_API void jlam_lexicon_free(jlam_lexicon *lexicon);

typedef struct jlam_doc jlam_doc;

/* Documents the first lambda in `expression`. `lexicon` may be NULL. */
JLAM_API jlam_status jlam_doc_generate(const char *expression, size_t length, const jlam_lexicon *lexicon,
                                       jlam_doc **out);
JLAM_API const char *jlam_doc_text(const jlam_doc *doc);
JLAM_API jlam_status jlam_doc_render(const jlam_doc *doc, jlam_format format, char **out);
JLAM_API void jlam_doc_free(jlam_doc *doc);

/* ---- detection --------------------------------------------------------- */

typedef struct jlam_detection jlam_detection;

typedef struct jlam_lambda_info {
  const char *path;
  const char *raw_text;
  size_t start_line, start_column;
  size_t end_line, end_column;
  size_t line_count;
  size_t param_count;
  size_t nesting_depth;
  int explicit_typing;
  int multi_line;
  int has_above_comment;
  int has_within_comment;
} jlam_lambda_info;

typedef struct jlam_diagnostic_info {
  const char *path;
  size_t line, column;
  jlam_status status;
  const char *message;
} jlam_diagnostic_info;

/* Detects lambdas in an in-memory source. `path` labels the records and
 * may be NULL. */
JLAM_API jlam_status jlam_detect_source(const char *text, size_t length, const char *path, jlam_detection **out);
/* A file, or every *.java file under a directory. */
JLAM_API jlam_status jlam_detect_path(const char *path, jlam_detection **out);
JLAM_API size_t jlam_detection_count(const jlam_detection *detection);
JLAM_API jlam_status jlam_detection_get(const jlam_detection *detection, size_t index, jlam_lambda_info *out);
JLAM_API size_t jlam_detection_diagnostic_count(const jlam_detection *detection);
JLAM_API jlam_status jlam_detection_diagnostic(const jlam_detection *detection, size_t index,
                                               jlam_diagnostic_info *out);
JLAM_API jlam_status jlam_detection_render(const jlam_detection *detection, jlam_format format, char **out);
JLAM_API void jlam_detection_free(jlam_detection *detection);

/* ---- corpus statistics ------------------------------------------------- */

typedef struct jlam_scan_options {
  const char *glob;   /* file-name pattern, NULL for "*.java" */
  unsigned threads;   /* 0: one per hardware thread */
  int include_hidden; /* descend into dot-directories */
  int keep_records;   /* include per-lambda records in JSON reports */
} jlam_scan_options;

typedef struct jlam_corpus jlam_corpus;

JLAM_API void jlam_scan_options_init(jlam_scan_options *options);
/* `options` may be NULL. */
JLAM_API jlam_status jlam_corpus_scan(const char *root, const jlam_scan_options *options, jlam_corpus **out);
JLAM_API uint64_t jlam_corpus_total(const jlam_corpus *corpus);
JLAM_API uint64_t jlam_corpus_unique(const jlam_corpus *corpus);
JLAM_API uint64_t jlam_corpus_files_scanned(const jlam_corpus *corpus);
JLAM_API jlam_status jlam_corpus_render(const jlam_corpus *corpus, jlam_format format, char **out);
JLAM_API jlam_status jlam_corpus_write_report(const jlam_corpus *corpus, jlam_format format, const char *path);
JLAM_API void jlam_corpus_free(jlam_corpus *corpus);

/* ---- line classification ----------------------------------------------- */

typedef enum jlam_line_source {
  JLAM_LINE_FILE = 0,
  JLAM_LINE_DIFF_ADDED,
  JLAM_LINE_DIFF_REMOVED,
  JLAM_LINE_DIFF_CONTEXT
} jlam_line_source;

typedef struct jlam_line_info {
  size_t input_line;
  size_t line, column;
  int lambda_start;
  jlam_line_source source;
  const char *path;
  const char *text;
} jlam_line_info;

typedef struct jlam_lines jlam_lines;

/* Each arrow-bearing line of a unified diff, scanned on its own. */
JLAM_API jlam_status jlam_diff_classify(const char *patch, size_t length, jlam_lines **out);
/* Each arrow-bearing line of a source text, with state carried across lines. */
JLAM_API jlam_status jlam_source_classify(const char *text, size_t length, jlam_lines **out);
JLAM_API size_t jlam_lines_count(const jlam_lines *lines);
JLAM_API jlam_status jlam_lines_get(const jlam_lines *lines, size_t index, jlam_line_info *out);
JLAM_API jlam_status jlam_lines_render(const jlam_lines *lines, jlam_format format, char **out);
JLAM_API void jlam_lines_free(jlam_lines *lines);

#ifdef __cplusplus
}
#endif

#endif /* JLAM_H */
