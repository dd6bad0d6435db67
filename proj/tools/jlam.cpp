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

// jlam: detect, document and count Java lambda expressions.
//
// Exit codes: 0 success, 1 input or usage error, 2 unsupported input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "jlam/jlam.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_unsupported = 2;

struct Config {
  std::string format = "text";
  std::string expr;
  std::string lexicon;
  std::string path;
  std::string report;
  std::string glob = "*.java";
  unsigned threads = 0;
  bool include_hidden = false;
  bool records = false;
};

int report_error(jlam_status status)
{
  std::cerr << "jlam: " << jlam_last_error() << '\n';
  return jlam_status_is_unsupported(status) ? exit_unsupported : exit_input;
}

// Prints and frees a library-owned string.
void put(char* s)
{
  std::fputs(s, stdout);
  jlam_string_free(s);
}

bool read_all(std::istream& in, std::string& out)
{
  out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return !in.bad();
}

bool read_path(const std::string& path, std::string& out)
{
  if (path == "-")
    return read_all(std::cin, out);
  std::ifstream in(path, std::ios::binary);
  return in && read_all(in, out);
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using DocPtr = std::unique_ptr<jlam_doc, Deleter<jlam_doc, jlam_doc_free>>;
using LexiconPtr = std::unique_ptr<jlam_lexicon, Deleter<jlam_lexicon, jlam_lexicon_free>>;
using DetectionPtr = std::unique_ptr<jlam_detection, Deleter<jlam_detection, jlam_detection_free>>;
using CorpusPtr = std::unique_ptr<jlam_corpus, Deleter<jlam_corpus, jlam_corpus_free>>;
using LinesPtr = std::unique_ptr<jlam_lines, Deleter<jlam_lines, jlam_lines_free>>;

int cmd_doc(const Config& cfg, jlam_format format, bool have_expr)
{
  std::string input = cfg.expr;
  if (!have_expr && !read_all(std::cin, input)) {
    std::cerr << "jlam: cannot read standard input\n";
    return exit_input;
  }
  if (input.find_first_not_of(" \t\r\n") == std::string::npos) {
    std::cerr << "jlam: empty input\n";
    return exit_input;
  }

  LexiconPtr lexicon;
  if (!cfg.lexicon.empty()) {
    jlam_lexicon* raw = nullptr;
    if (const jlam_status s = jlam_lexicon_load(cfg.lexicon.c_str(), &raw); s != JLAM_OK)
      return report_error(s);
    lexicon.reset(raw);
  }

  jlam_doc* raw = nullptr;
  if (const jlam_status s = jlam_doc_generate(input.data(), input.size(), lexicon.get(), &raw); s != JLAM_OK)
    return report_error(s);
  const DocPtr doc(raw);
  char* out = nullptr;
  if (const jlam_status s = jlam_doc_render(doc.get(), format, &out); s != JLAM_OK)
    return report_error(s);
  put(out);
  return exit_ok;
}

int cmd_detect(const Config& cfg, jlam_format format)
{
  jlam_detection* raw = nullptr;
  if (const jlam_status s = jlam_detect_path(cfg.path.c_str(), &raw); s != JLAM_OK)
    return report_error(s);
  const DetectionPtr detection(raw);

  if (format != JLAM_FORMAT_JSON) {
    const std::size_t n = jlam_detection_diagnostic_count(detection.get());
    for (std::size_t i = 0; i < n; ++i) {
      jlam_diagnostic_info d;
      if (jlam_detection_diagnostic(detection.get(), i, &d) == JLAM_OK)
        std::cerr << d.path << ':' << d.line + 1 << ':' << d.column + 1 << ": " << jlam_status_name(d.status)
                  << ": " << d.message << '\n';
    }
  }
  char* out = nullptr;
  if (const jlam_status s = jlam_detection_render(detection.get(), format, &out); s != JLAM_OK)
    return report_error(s);
  put(out);
  return exit_ok;
}

int cmd_scan(const Config& cfg, jlam_format format)
{
  jlam_scan_options options;
  jlam_scan_options_init(&options);
  options.glob = cfg.glob.c_str();
  options.threads = cfg.threads;
  options.include_hidden = cfg.include_hidden;
  options.keep_records = cfg.records;

  jlam_corpus* raw = nullptr;
  if (const jlam_status s = jlam_corpus_scan(cfg.path.c_str(), &options, &raw); s != JLAM_OK)
    return report_error(s);
  const CorpusPtr corpus(raw);

  if (!cfg.report.empty()) {
    const jlam_format report_format = format == JLAM_FORMAT_TEXT ? JLAM_FORMAT_JSON : format;
    if (const jlam_status s = jlam_corpus_write_report(corpus.get(), report_format, cfg.report.c_str()); s != JLAM_OK)
      return report_error(s);
    format = JLAM_FORMAT_TEXT;
  }
  char* out = nullptr;
  if (const jlam_status s = jlam_corpus_render(corpus.get(), format, &out); s != JLAM_OK)
    return report_error(s);
  put(out);
  return exit_ok;
}

int cmd_diff(const Config& cfg, jlam_format format)
{
  std::string patch;
  if (!read_path(cfg.path, patch)) {
    std::cerr << "jlam: cannot read '" << cfg.path << "'\n";
    return exit_input;
  }
  jlam_lines* raw = nullptr;
  if (const jlam_status s = jlam_diff_classify(patch.data(), patch.size(), &raw); s != JLAM_OK)
    return report_error(s);
  const LinesPtr lines(raw);
  char* out = nullptr;
  if (const jlam_status s = jlam_lines_render(lines.get(), format, &out); s != JLAM_OK)
    return report_error(s);
  put(out);
  return exit_ok;
}

void add_format(CLI::App* cmd, Config& cfg)
{
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Detect, document and count Java lambda expressions", "jlam"};
  app.set_version_flag("--version", std::string(jlam_version()));
  app.require_subcommand(1);
  Config cfg;

  CLI::App* doc = app.add_subcommand("doc", "Generate documentation for a lambda expression (stdin if no -e)");
  CLI::Option* expr = doc->add_option("-e,--expr", cfg.expr, "Lambda expression");
  doc->add_option("--lexicon", cfg.lexicon, "Method lexicon file (name<TAB>phrase lines)")->check(CLI::ExistingFile);
  add_format(doc, cfg);

  CLI::App* detect = app.add_subcommand("detect", "List the lambdas in a file or directory");
  detect->add_option("path", cfg.path, "Java file or directory")->required();
  add_format(detect, cfg);

  CLI::App* scan = app.add_subcommand("scan", "Corpus statistics for a directory tree");
  scan->add_option("root", cfg.path, "Root directory")->required();
  scan->add_option("--report", cfg.report, "Write the report to this file");
  scan->add_option("--glob", cfg.glob, "File-name pattern")->capture_default_str();
  scan->add_option("--threads", cfg.threads, "Worker threads (0: one per CPU)")->capture_default_str();
  scan->add_flag("--include-hidden", cfg.include_hidden, "Descend into dot-directories");
  scan->add_flag("--records", cfg.records, "Include per-lambda records in JSON reports");
  add_format(scan, cfg);

  CLI::App* diff = app.add_subcommand("diff", "Classify the arrow-bearing lines of a unified diff");
  diff->add_option("patch", cfg.path, "Patch file, or - for standard input")->required();
  add_format(diff, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  jlam_format format = JLAM_FORMAT_TEXT;
  if (jlam_format_parse(cfg.format.c_str(), &format) != JLAM_OK)
    return report_error(JLAM_INVALID_ARGUMENT);

  if (doc->parsed())
    return cmd_doc(cfg, format, expr->count() > 0);
  if (detect->parsed())
    return cmd_detect(cfg, format);
  if (scan->parsed())
    return cmd_scan(cfg, format);
  return cmd_diff(cfg, format);
}
