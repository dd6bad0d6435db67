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

#include "jlam/report.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace jlam {

std::optional<Format> parse_format(std::string_view name) noexcept
{
  if (name == "text")
    return Format::Text;
  if (name == "json")
    return Format::Json;
  if (name == "csv")
    return Format::Csv;
  return std::nullopt;
}

std::string_view to_string(Format format) noexcept
{
  switch (format) {
  case Format::Text: return "text";
  case Format::Json: return "json";
  case Format::Csv: return "csv";
  }
  return "text";
}

namespace {

std::string json_string(std::string_view s)
{
  return nlohmann::json(std::string(s)).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

std::string fixed6(double v)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string csv_field(std::string_view s)
{
  if (s.find_first_of(",\"\r\n") == std::string_view::npos)
    return std::string(s);
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Minimal streaming JSON writer with two-space indentation. Keys are written
// in the order given; callers pass them sorted.
class JsonWriter {
public:
  void begin_object() { open('{'); }
  void end_object() { close('}'); }
  void begin_array() { open('['); }
  void end_array() { close(']'); }

  void key(std::string_view k)
  {
    separator();
    out_ += json_string(k);
    out_ += ": ";
    after_key_ = true;
  }

  void raw(std::string_view literal)
  {
    separator();
    out_ += literal;
  }
  void value(std::string_view s) { raw(json_string(s)); }
  void value(const char* s) { raw(json_string(s)); }
  void value(std::uint64_t n) { raw(std::to_string(n)); }
  void value(bool b) { raw(b ? "true" : "false"); }
  void null() { raw("null"); }

  template <typename T>
  void field(std::string_view k, const T& v)
  {
    key(k);
    value(v);
  }

  std::string finish()
  {
    out_ += '\n';
    return std::move(out_);
  }

private:
  void separator()
  {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    if (!first_.empty()) {
      if (!first_.back())
        out_ += ',';
      first_.back() = false;
      newline();
    }
  }

  void open(char c)
  {
    separator();
    out_ += c;
    first_.push_back(true);
  }

  void close(char c)
  {
    const bool empty = first_.back();
    first_.pop_back();
    if (!empty)
      newline();
    out_ += c;
  }

  void newline()
  {
    out_ += '\n';
    out_.append(first_.size() * 2, ' ');
  }

  std::string out_;
  std::vector<bool> first_;
  bool after_key_ = false;
};

void write_histogram(JsonWriter& w, std::string_view name, const std::map<std::size_t, std::uint64_t>& h)
{
  w.key(name);
  w.begin_object();
  for (const auto& [k, v] : h)
    w.field(std::to_string(k), v);
  w.end_object();
}

void write_lambda(JsonWriter& w, const std::string& path, const LambdaExpression& l)
{
  w.begin_object();
  w.field("body_kind", to_string(l.body_kind));
  w.key("comments");
  w.begin_array();
  for (const LambdaComment& c : l.comments) {
    w.begin_object();
    w.field("column", std::uint64_t{c.location.column});
    w.field("line", std::uint64_t{c.location.line});
    w.field("placement", to_string(c.placement));
    w.field("text", c.text);
    w.end_object();
  }
  w.end_array();
  w.field("end_column", std::uint64_t{l.end.column});
  w.field("end_line", std::uint64_t{l.end.line});
  w.field("line_count", std::uint64_t{l.line_count});
  w.field("nesting_depth", std::uint64_t{l.nesting_depth});
  w.field("param_count", std::uint64_t{l.param_count});
  w.key("parameters");
  w.begin_array();
  for (const Parameter& p : l.parameters) {
    w.begin_object();
    w.field("name", p.name);
    w.key("type");
    if (p.declared_type)
      w.value(*p.declared_type);
    else
      w.null();
    w.end_object();
  }
  w.end_array();
  w.field("path", path);
  w.field("raw_text", l.raw_text);
  w.field("start_column", std::uint64_t{l.start.column});
  w.field("start_line", std::uint64_t{l.start.line});
  w.field("typing", to_string(l.typing));
  w.end_object();
}

std::string comment_summary(const LambdaExpression& l)
{
  const bool above = l.has_above_comment();
  const bool within = l.has_within_comment();
  if (above && within)
    return "above+within";
  if (above)
    return "above";
  if (within)
    return "within";
  return "none";
}

std::string first_line(std::string_view s)
{
  const auto nl = s.find_first_of("\r\n");
  if (nl == std::string_view::npos)
    return std::string(s);
  return std::string(s.substr(0, nl)) + " ...";
}

} // namespace

std::string summary_line(const CorpusStats& stats)
{
  return "total=" + std::to_string(stats.total_lambdas) + " unique=" + std::to_string(stats.unique_lambdas());
}

std::string render_stats(const CorpusStats& stats, std::span<const LambdaRecord> records, Format format)
{
  const std::vector<DuplicateEntry> dups = stats.duplicates();

  if (format == Format::Text)
    return summary_line(stats) + "\n";

  if (format == Format::Csv) {
    std::string out = "key,value\n";
    auto row = [&](const std::string& k, const std::string& v) { out += csv_field(k) + "," + csv_field(v) + "\n"; };
    row("comment_coverage.above_only", std::to_string(stats.comment_coverage.above_only));
    row("comment_coverage.both", std::to_string(stats.comment_coverage.both));
    row("comment_coverage.none", std::to_string(stats.comment_coverage.none));
    row("comment_coverage.within_only", std::to_string(stats.comment_coverage.within_only));
    for (std::size_t i = 0; i < dups.size(); ++i) {
      row("duplicates." + std::to_string(i) + ".count", std::to_string(dups[i].count));
      row("duplicates." + std::to_string(i) + ".text", dups[i].text);
    }
    row("exception_unique_fraction", fixed6(stats.exception_unique_fraction()));
    row("explicit_count", std::to_string(stats.explicit_count));
    row("files_scanned", std::to_string(stats.files_scanned));
    row("files_with_lambdas", std::to_string(stats.files_with_lambdas));
    row("implicit_count", std::to_string(stats.implicit_count));
    for (const auto& [k, v] : stats.line_count_histogram)
      row("line_count_histogram." + std::to_string(k), std::to_string(v));
    for (const auto& [k, v] : stats.param_count_histogram)
      row("param_count_histogram." + std::to_string(k), std::to_string(v));
    for (std::size_t i = 0; i < stats.skipped.size(); ++i) {
      row("skipped." + std::to_string(i) + ".path", stats.skipped[i].path);
      row("skipped." + std::to_string(i) + ".reason", stats.skipped[i].reason);
    }
    row("total_lambdas", std::to_string(stats.total_lambdas));
    row("unique_lambdas", std::to_string(stats.unique_lambdas()));
    return out;
  }

  JsonWriter w;
  w.begin_object();
  w.key("comment_coverage");
  w.begin_object();
  w.field("above_only", stats.comment_coverage.above_only);
  w.field("both", stats.comment_coverage.both);
  w.field("none", stats.comment_coverage.none);
  w.field("within_only", stats.comment_coverage.within_only);
  w.end_object();
  w.key("duplicates");
  w.begin_array();
  for (const DuplicateEntry& d : dups) {
    w.begin_object();
    w.field("count", d.count);
    w.field("text", d.text);
    w.end_object();
  }
  w.end_array();
  w.key("exception_unique_fraction");
  w.raw(fixed6(stats.exception_unique_fraction()));
  w.field("explicit_count", stats.explicit_count);
  w.field("files_scanned", stats.files_scanned);
  w.field("files_with_lambdas", stats.files_with_lambdas);
  w.field("implicit_count", stats.implicit_count);
  if (!records.empty()) {
    w.key("lambdas");
    w.begin_array();
    for (const LambdaRecord& r : records)
      write_lambda(w, r.path, r.lambda);
    w.end_array();
  }
  write_histogram(w, "line_count_histogram", stats.line_count_histogram);
  write_histogram(w, "param_count_histogram", stats.param_count_histogram);
  w.key("skipped");
  w.begin_array();
  for (const SkippedFile& s : stats.skipped) {
    w.begin_object();
    w.field("path", s.path);
    w.field("reason", s.reason);
    w.end_object();
  }
  w.end_array();
  w.field("total_lambdas", stats.total_lambdas);
  w.field("unique_lambdas", stats.unique_lambdas());
  w.end_object();
  return w.finish();
}

std::string render_records(std::span<const LambdaRecord> records, std::span<const Diagnostic> diagnostics,
                           Format format)
{
  if (format == Format::Json) {
    JsonWriter w;
    w.begin_object();
    w.key("diagnostics");
    w.begin_array();
    for (const Diagnostic& d : diagnostics) {
      w.begin_object();
      w.field("code", to_string(d.code));
      w.field("column", std::uint64_t{d.location.column});
      w.field("line", std::uint64_t{d.location.line});
      w.field("message", d.message);
      w.end_object();
    }
    w.end_array();
    w.key("lambdas");
    w.begin_array();
    for (const LambdaRecord& r : records)
      write_lambda(w, r.path, r.lambda);
    w.end_array();
    w.end_object();
    return w.finish();
  }

  std::string out;
  if (format == Format::Csv) {
    out = "path,start_line,start_column,end_line,end_column,line_count,param_count,typing,body_kind,"
          "nesting_depth,comments,raw_text\n";
    for (const LambdaRecord& r : records) {
      const LambdaExpression& l = r.lambda;
      out += csv_field(r.path) + "," + std::to_string(l.start.line) + "," + std::to_string(l.start.column) +
             "," + std::to_string(l.end.line) + "," + std::to_string(l.end.column) + "," +
             std::to_string(l.line_count) + "," + std::to_string(l.param_count) + "," +
             std::string(to_string(l.typing)) + "," + std::string(to_string(l.body_kind)) + "," +
             std::to_string(l.nesting_depth) + "," + comment_summary(l) + "," + csv_field(l.raw_text) + "\n";
    }
    return out;
  }

  for (const LambdaRecord& r : records) {
    const LambdaExpression& l = r.lambda;
    out += r.path + ":" + std::to_string(l.start.line + 1) + ":" + std::to_string(l.start.column + 1) + "-" +
           std::to_string(l.end.line + 1) + ":" + std::to_string(l.end.column + 1) + " " +
           std::string(to_string(l.typing)) + " " + std::string(to_string(l.body_kind)) +
           " params=" + std::to_string(l.param_count) + " lines=" + std::to_string(l.line_count) +
           " depth=" + std::to_string(l.nesting_depth) + " comments=" + comment_summary(l) + "\n";
    out += "    " + first_line(l.raw_text) + "\n";
  }
  return out;
}

std::string render_lines(std::span<const LineClassification> lines, Format format)
{
  if (format == Format::Json) {
    JsonWriter w;
    w.begin_array();
    for (const LineClassification& c : lines) {
      w.begin_object();
      w.field("column", std::uint64_t{c.location.column});
      w.field("input_line", std::uint64_t{c.input_line});
      w.field("label", to_string(c.label));
      w.field("line", std::uint64_t{c.location.line});
      w.field("path", c.path);
      w.field("source", to_string(c.source));
      w.field("text", c.text);
      w.end_object();
    }
    w.end_array();
    return w.finish();
  }

  std::string out;
  if (format == Format::Csv) {
    out = "input_line,path,line,column,source,label,text\n";
    for (const LineClassification& c : lines)
      out += std::to_string(c.input_line) + "," + csv_field(c.path) + "," + std::to_string(c.location.line) +
             "," + std::to_string(c.location.column) + "," + std::string(to_string(c.source)) + "," +
             std::string(to_string(c.label)) + "," + csv_field(c.text) + "\n";
    return out;
  }
  for (const LineClassification& c : lines) {
    const std::string where = (c.path.empty() ? std::string() : c.path + ":") + std::to_string(c.location.line + 1) +
                              ":" + std::to_string(c.location.column + 1);
    out += std::to_string(c.input_line + 1) + "\t" + std::string(to_string(c.source)) + "\t" +
           std::string(to_string(c.label)) + "\t" + where + "\t" + c.text + "\n";
  }
  return out;
}

std::string render_doc(const DocSentence& doc, Format format)
{
  if (format == Format::Text)
    return doc.text + "\n";

  if (format == Format::Csv) {
    std::string out = "key,value\n";
    auto row = [&](const std::string& k, const std::string& v) { out += csv_field(k) + "," + csv_field(v) + "\n"; };
    for (std::size_t i = 0; i < doc.lexicon_hits.size(); ++i) {
      row("lexicon_hits." + std::to_string(i) + ".method", doc.lexicon_hits[i].method_name);
      row("lexicon_hits." + std::to_string(i) + ".phrase", doc.lexicon_hits[i].phrase);
    }
    row("param_clause", doc.param_clause);
    row("param_count", std::to_string(doc.param_count));
    row("return_clause", doc.return_clause);
    row("text", doc.text);
    for (std::size_t i = 0; i < doc.unknown_operators.size(); ++i)
      row("unknown_operators." + std::to_string(i), doc.unknown_operators[i]);
    return out;
  }

  JsonWriter w;
  w.begin_object();
  w.key("lexicon_hits");
  w.begin_array();
  for (const LexiconHit& h : doc.lexicon_hits) {
    w.begin_object();
    w.field("method", h.method_name);
    w.field("phrase", h.phrase);
    w.end_object();
  }
  w.end_array();
  w.field("param_clause", doc.param_clause);
  w.field("param_count", std::uint64_t{doc.param_count});
  w.field("return_clause", doc.return_clause);
  w.field("text", doc.text);
  w.key("unknown_operators");
  w.begin_array();
  for (const std::string& op : doc.unknown_operators)
    w.value(op);
  w.end_array();
  w.end_object();
  return w.finish();
}

void write_file(const std::filesystem::path& path, std::string_view content)
{
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Error(ErrorCode::Io, "cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out)
    throw Error(ErrorCode::Io, "failed writing '" + path.string() + "'");
}

void write_report(const CorpusStats& stats, std::span<const LambdaRecord> records, Format format,
                  const std::filesystem::path& path)
{
  write_file(path, render_stats(stats, records, format));
}

} // namespace jlam
