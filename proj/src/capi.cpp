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

#include "jlam/jlam.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>

#include "jlam/corpus.hpp"
#include "jlam/detect.hpp"
#include "jlam/docgen.hpp"
#include "jlam/report.hpp"

struct jlam_lexicon {
  jlam::Lexicon lexicon;
};

struct jlam_doc {
  jlam::DocSentence doc;
};

struct jlam_detection {
  std::vector<jlam::LambdaRecord> records;
  std::vector<jlam::Diagnostic> diagnostics;
  std::string diagnostic_path;
};

struct jlam_corpus {
  jlam::CorpusScan scan;
};

struct jlam_lines {
  std::vector<jlam::LineClassification> lines;
};

namespace {

thread_local std::string last_error;

jlam_status status_of(jlam::ErrorCode code)
{
  using jlam::ErrorCode;
  switch (code) {
  case ErrorCode::NoArrow: return JLAM_NO_ARROW;
  case ErrorCode::MalformedHead: return JLAM_MALFORMED_HEAD;
  case ErrorCode::UnbalancedDelimiters: return JLAM_UNBALANCED_DELIMITERS;
  case ErrorCode::MissingBody: return JLAM_MISSING_BODY;
  case ErrorCode::MultiStatementBody: return JLAM_MULTI_STATEMENT_BODY;
  case ErrorCode::NestedLambdaBody: return JLAM_NESTED_LAMBDA_BODY;
  case ErrorCode::EmptyBody: return JLAM_EMPTY_BODY;
  case ErrorCode::UnsupportedStatement: return JLAM_UNSUPPORTED_STATEMENT;
  case ErrorCode::MalformedPatch: return JLAM_MALFORMED_PATCH;
  case ErrorCode::InvalidLexicon: return JLAM_INVALID_LEXICON;
  case ErrorCode::Io: return JLAM_IO;
  case ErrorCode::InvalidArgument: return JLAM_INVALID_ARGUMENT;
  }
  return JLAM_INTERNAL;
}

jlam_status fail(jlam_status status, std::string message)
{
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into a status and the thread's last
// error message.
template <typename F>
jlam_status guarded(F&& body) noexcept
{
  try {
    last_error.clear();
    body();
    return JLAM_OK;
  } catch (const jlam::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(JLAM_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(JLAM_INTERNAL, e.what());
  } catch (...) {
    return fail(JLAM_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s)
{
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr)
    throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

jlam::Format format_of(jlam_format format)
{
  switch (format) {
  case JLAM_FORMAT_TEXT: return jlam::Format::Text;
  case JLAM_FORMAT_JSON: return jlam::Format::Json;
  case JLAM_FORMAT_CSV: return jlam::Format::Csv;
  }
  throw jlam::Error(jlam::ErrorCode::InvalidArgument, "unknown format");
}

void require(bool condition, const char* what)
{
  if (!condition)
    throw jlam::Error(jlam::ErrorCode::InvalidArgument, what);
}

std::string read_file(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw jlam::Error(jlam::ErrorCode::Io, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad())
    throw jlam::Error(jlam::ErrorCode::Io, "cannot read '" + path.string() + "'");
  return std::move(ss).str();
}

std::unique_ptr<jlam_detection> detect_text(std::string text, const char* path)
{
  auto d = std::make_unique<jlam_detection>();
  d->diagnostic_path = path != nullptr ? path : "";
  jlam::Detection found = jlam::detect_lambdas(std::move(text));
  for (jlam::LambdaExpression& l : found.lambdas)
    d->records.push_back({d->diagnostic_path, std::move(l)});
  d->diagnostics = std::move(found.diagnostics);
  return d;
}

template <typename Handle, typename... Args>
void emit(Handle** out, Args&&... args)
{
  *out = new Handle{std::forward<Args>(args)...};
}

} // namespace

extern "C" {

const char* jlam_version(void)
{
  return "0.1.0";
}

const char* jlam_status_name(jlam_status status)
{
  switch (status) {
  case JLAM_OK: return "Ok";
  case JLAM_INTERNAL: return "Internal";
  default: break;
  }
  if (status < JLAM_OK || status > JLAM_INTERNAL)
    return "Unknown";
  return jlam::to_string(static_cast<jlam::ErrorCode>(status - 1)).data();
}

int jlam_status_is_unsupported(jlam_status status)
{
  return status > JLAM_OK && status < JLAM_INTERNAL && jlam::is_unsupported(static_cast<jlam::ErrorCode>(status - 1));
}

const char* jlam_last_error(void)
{
  return last_error.c_str();
}

void jlam_string_free(char* s)
{
  std::free(s);
}

jlam_status jlam_format_parse(const char* name, jlam_format* out)
{
  return guarded([&] {
    require(name != nullptr && out != nullptr, "null argument");
    const auto f = jlam::parse_format(name);
    if (!f)
      throw jlam::Error(jlam::ErrorCode::InvalidArgument,
                        "unknown format '" + std::string(name) + "' (expected text, json or csv)");
    *out = *f == jlam::Format::Json ? JLAM_FORMAT_JSON : *f == jlam::Format::Csv ? JLAM_FORMAT_CSV : JLAM_FORMAT_TEXT;
  });
}

// ---- documentation --------------------------------------------------------

jlam_status jlam_lexicon_builtin(jlam_lexicon** out)
{
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = nullptr;
    emit(out, jlam::Lexicon::builtin());
  });
}

jlam_status jlam_lexicon_load(const char* path, jlam_lexicon** out)
{
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    emit(out, jlam::Lexicon::load(path));
  });
}

void jlam_lexicon_free(jlam_lexicon* lexicon)
{
  delete lexicon;
}

jlam_status jlam_doc_generate(const char* expression, size_t length, const jlam_lexicon* lexicon, jlam_doc** out)
{
  return guarded([&] {
    require(out != nullptr && (expression != nullptr || length == 0), "null argument");
    *out = nullptr;
    const std::string_view text(expression == nullptr ? "" : expression, length);
    emit(out, lexicon != nullptr ? jlam::generate_doc(text, lexicon->lexicon) : jlam::generate_doc(text));
  });
}

const char* jlam_doc_text(const jlam_doc* doc)
{
  return doc == nullptr ? "" : doc->doc.text.c_str();
}

jlam_status jlam_doc_render(const jlam_doc* doc, jlam_format format, char** out)
{
  return guarded([&] {
    require(doc != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    *out = copy_string(jlam::render_doc(doc->doc, format_of(format)));
  });
}

void jlam_doc_free(jlam_doc* doc)
{
  delete doc;
}

// ---- detection ------------------------------------------------------------

jlam_status jlam_detect_source(const char* text, size_t length, const char* path, jlam_detection** out)
{
  return guarded([&] {
    require(out != nullptr && (text != nullptr || length == 0), "null argument");
    *out = nullptr;
    *out = detect_text(std::string(text == nullptr ? "" : text, length), path).release();
  });
}

jlam_status jlam_detect_path(const char* path, jlam_detection** out)
{
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    std::error_code ec;
    const std::filesystem::path p(path);
    if (std::filesystem::is_directory(p, ec)) {
      jlam::ScanOptions options;
      options.keep_records = true;
      auto d = std::make_unique<jlam_detection>();
      d->records = jlam::scan_tree(p, options).records;
      *out = d.release();
      return;
    }
    if (!std::filesystem::exists(p, ec))
      throw jlam::Error(jlam::ErrorCode::Io, "no such file or directory: '" + p.string() + "'");
    *out = detect_text(read_file(p), path).release();
  });
}

size_t jlam_detection_count(const jlam_detection* detection)
{
  return detection == nullptr ? 0 : detection->records.size();
}

jlam_status jlam_detection_get(const jlam_detection* detection, size_t index, jlam_lambda_info* out)
{
  return guarded([&] {
    require(detection != nullptr && out != nullptr, "null argument");
    require(index < detection->records.size(), "index out of range");
    const jlam::LambdaRecord& r = detection->records[index];
    const jlam::LambdaExpression& l = r.lambda;
    *out = jlam_lambda_info{r.path.c_str(),
                            l.raw_text.c_str(),
                            l.start.line,
                            l.start.column,
                            l.end.line,
                            l.end.column,
                            l.line_count,
                            l.param_count,
                            l.nesting_depth,
                            l.typing == jlam::Typing::Explicit,
                            l.body_kind == jlam::BodyKind::MultiLine,
                            l.has_above_comment(),
                            l.has_within_comment()};
  });
}

size_t jlam_detection_diagnostic_count(const jlam_detection* detection)
{
  return detection == nullptr ? 0 : detection->diagnostics.size();
}

jlam_status jlam_detection_diagnostic(const jlam_detection* detection, size_t index, jlam_diagnostic_info* out)
{
  return guarded([&] {
    require(detection != nullptr && out != nullptr, "null argument");
    require(index < detection->diagnostics.size(), "index out of range");
    const jlam::Diagnostic& d = detection->diagnostics[index];
    *out = jlam_diagnostic_info{detection->diagnostic_path.c_str(), d.location.line, d.location.column,
                                status_of(d.code), d.message.c_str()};
  });
}

jlam_status jlam_detection_render(const jlam_detection* detection, jlam_format format, char** out)
{
  return guarded([&] {
    require(detection != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    *out = copy_string(jlam::render_records(detection->records, detection->diagnostics, format_of(format)));
  });
}

void jlam_detection_free(jlam_detection* detection)
{
  delete detection;
}

// ---- corpus statistics ----------------------------------------------------

void jlam_scan_options_init(jlam_scan_options* options)
{
  if (options != nullptr)
    *options = jlam_scan_options{nullptr, 0, 0, 0};
}

jlam_status jlam_corpus_scan(const char* root, const jlam_scan_options* options, jlam_corpus** out)
{
  return guarded([&] {
    require(root != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    jlam::ScanOptions opts;
    if (options != nullptr) {
      if (options->glob != nullptr)
        opts.glob = options->glob;
      opts.threads = options->threads;
      opts.include_hidden = options->include_hidden != 0;
      opts.keep_records = options->keep_records != 0;
    }
    emit(out, jlam::scan_tree(root, opts));
  });
}

uint64_t jlam_corpus_total(const jlam_corpus* corpus)
{
  return corpus == nullptr ? 0 : corpus->scan.stats.total_lambdas;
}

uint64_t jlam_corpus_unique(const jlam_corpus* corpus)
{
  return corpus == nullptr ? 0 : corpus->scan.stats.unique_lambdas();
}

uint64_t jlam_corpus_files_scanned(const jlam_corpus* corpus)
{
  return corpus == nullptr ? 0 : corpus->scan.stats.files_scanned;
}

jlam_status jlam_corpus_render(const jlam_corpus* corpus, jlam_format format, char** out)
{
  return guarded([&] {
    require(corpus != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    *out = copy_string(jlam::render_stats(corpus->scan.stats, corpus->scan.records, format_of(format)));
  });
}

jlam_status jlam_corpus_write_report(const jlam_corpus* corpus, jlam_format format, const char* path)
{
  return guarded([&] {
    require(corpus != nullptr && path != nullptr, "null argument");
    jlam::write_report(corpus->scan.stats, corpus->scan.records, format_of(format), path);
  });
}

void jlam_corpus_free(jlam_corpus* corpus)
{
  delete corpus;
}

// ---- line classification --------------------------------------------------

jlam_status jlam_diff_classify(const char* patch, size_t length, jlam_lines** out)
{
  return guarded([&] {
    require(out != nullptr && (patch != nullptr || length == 0), "null argument");
    *out = nullptr;
    emit(out, jlam::classify_diff_lines(std::string_view(patch == nullptr ? "" : patch, length)));
  });
}

jlam_status jlam_source_classify(const char* text, size_t length, jlam_lines** out)
{
  return guarded([&] {
    require(out != nullptr && (text != nullptr || length == 0), "null argument");
    *out = nullptr;
    const jlam::LexedSource source(std::string(text == nullptr ? "" : text, length));
    emit(out, jlam::classify_source_lines(source));
  });
}

size_t jlam_lines_count(const jlam_lines* lines)
{
  return lines == nullptr ? 0 : lines->lines.size();
}

jlam_status jlam_lines_get(const jlam_lines* lines, size_t index, jlam_line_info* out)
{
  return guarded([&] {
    require(lines != nullptr && out != nullptr, "null argument");
    require(index < lines->lines.size(), "index out of range");
    const jlam::LineClassification& c = lines->lines[index];
    *out = jlam_line_info{c.input_line,
                          c.location.line,
                          c.location.column,
                          c.label == jlam::LineLabel::LambdaStart,
                          static_cast<jlam_line_source>(c.source),
                          c.path.c_str(),
                          c.text.c_str()};
  });
}

jlam_status jlam_lines_render(const jlam_lines* lines, jlam_format format, char** out)
{
  return guarded([&] {
    require(lines != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    *out = copy_string(jlam::render_lines(lines->lines, format_of(format)));
  });
}

void jlam_lines_free(jlam_lines* lines)
{
  delete lines;
}

} // extern "C"
