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

// Acceptance suite. Prints one PASS or FAIL line per criterion; with a
// criterion number as the argument only that one runs.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "jlam/corpus.hpp"
#include "jlam/detect.hpp"
#include "jlam/docgen.hpp"
#include "jlam/report.hpp"
#include "test_support.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what)
  {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome golden_docs_suite()
{
  Outcome o;
  const auto start = Clock::now();
  const auto rows = testing::golden_docs();
  o.require(rows.size() == 5, "expected five golden documentation rows");
  for (const auto& row : rows) {
    std::string got;
    try {
      got = jlam::generate_doc(row.expression).text;
    } catch (const std::exception& e) {
      got = e.what();
    }
    o.require(testing::doc_tokens(got) == testing::doc_tokens(row.documentation), "mismatch for " + row.expression +
                                                                                    ": " + got);
  }
  const double t = seconds_since(start);
  o.require(t < 1.0, "took " + std::to_string(t) + " s");
  if (o.pass)
    o.detail = "5/5 rows token-equal";
  return o;
}

struct Confusion {
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;
};

void score(Confusion& c, const std::map<std::size_t, std::string>& truth,
           const std::map<std::size_t, std::string>& predicted)
{
  for (const auto& [line, label] : truth) {
    const auto it = predicted.find(line);
    const bool actual = label == "LambdaStart";
    const bool said = it != predicted.end() && it->second == "LambdaStart";
    if (actual && said)
      ++c.tp;
    else if (!actual && said)
      ++c.fp;
    else if (actual)
      ++c.fn;
    else
      ++c.tn;
  }
  for (const auto& [line, label] : predicted)
    if (!truth.count(line) && label == "LambdaStart")
      ++c.fp;
}

Outcome detector_accuracy()
{
  Outcome o;
  const auto start = Clock::now();

  const auto source_truth = testing::read_labels("labeled_source.java.labels");
  std::map<std::size_t, std::string> source_pred;
  const jlam::LexedSource src(testing::read_fixture("labeled_source.java"));
  for (const auto& c : jlam::classify_source_lines(src))
    source_pred[c.input_line + 1] = std::string(jlam::to_string(c.label));

  const auto diff_truth = testing::read_labels("labeled.diff.labels");
  std::map<std::size_t, std::string> diff_pred;
  for (const auto& c : jlam::classify_diff_lines(testing::read_fixture("labeled.diff")))
    diff_pred[c.input_line + 1] = std::string(jlam::to_string(c.label));

  o.require(source_truth.size() >= 100, "fewer than 100 labeled source lines");
  o.require(diff_truth.size() >= 100, "fewer than 100 labeled diff lines");
  o.require(source_pred.size() == source_truth.size(), "source arrow lines differ from the labeled set");
  o.require(diff_pred.size() == diff_truth.size(), "diff arrow lines differ from the labeled set");

  Confusion c;
  score(c, source_truth, source_pred);
  score(c, diff_truth, diff_pred);
  const double precision = c.tp + c.fp == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  const double recall = c.tp + c.fn == 0 ? 0.0 : static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  o.require(precision == 1.0 && recall == 1.0, "precision " + std::to_string(precision) + ", recall " +
                                                    std::to_string(recall));
  const double t = seconds_since(start);
  o.require(t < 1.0, "took " + std::to_string(t) + " s");
  if (o.pass)
    o.detail = std::to_string(source_truth.size()) + " source + " + std::to_string(diff_truth.size()) +
               " diff lines, precision 1.0, recall 1.0";
  return o;
}

Outcome sample_metadata()
{
  Outcome o;
  const auto d = jlam::detect_lambdas(testing::read_fixture("sample_lambdas.java"));
  o.require(d.lambdas.size() == 2, "expected two lambdas");
  if (d.lambdas.size() != 2)
    return o;
  const auto& ex1 = d.lambdas[0];
  const auto& ex2 = d.lambdas[1];
  o.require(ex1.body_kind == jlam::BodyKind::SingleLine, "Ex1 not single-line");
  o.require(ex1.typing == jlam::Typing::Explicit, "Ex1 not explicit");
  o.require(ex1.param_count == 1, "Ex1 parameter count");
  o.require(ex2.body_kind == jlam::BodyKind::MultiLine, "Ex2 not multi-line");
  o.require(ex2.typing == jlam::Typing::Implicit, "Ex2 not implicit");
  o.require(ex2.param_count == 2, "Ex2 parameter count");
  o.require(ex2.line_count == 3, "Ex2 line count");
  if (o.pass)
    o.detail = "Ex1 SingleLine/Explicit/1, Ex2 MultiLine/Implicit/2/3 lines";
  return o;
}

Outcome conservation()
{
  Outcome o;
  std::mt19937 rng(2019);
  int cases = 0;
  for (; cases < 200 && o.pass; ++cases) {
    testing::TempDir dir;
    const auto files = testing::make_tree(rng, dir.path(), 1 + static_cast<int>(rng() % 8));
    const auto expected = testing::expected_for(files);
    jlam::ScanOptions serial;
    serial.threads = 1;
    serial.keep_records = true;
    const auto scan = jlam::scan_tree(dir.path(), serial);
    const auto& s = scan.stats;
    const std::string at = " (case " + std::to_string(cases) + ")";

    std::uint64_t per_file = 0;
    for (const auto& f : files)
      per_file += jlam::detect_lambdas(f.content).lambdas.size();
    o.require(per_file == s.total_lambdas, "per-file counts do not sum to the total" + at);
    std::uint64_t lines = 0, params = 0;
    for (const auto& [k, v] : s.line_count_histogram)
      lines += v;
    for (const auto& [k, v] : s.param_count_histogram)
      params += v;
    o.require(lines == s.total_lambdas && params == s.total_lambdas, "histogram sums differ from the total" + at);
    o.require(s.explicit_count + s.implicit_count == s.total_lambdas, "explicit + implicit != total" + at);
    o.require(s.comment_coverage.total() == s.total_lambdas, "coverage categories do not sum to the total" + at);
    o.require(s.unique_lambdas() <= s.total_lambdas, "unique > total" + at);
    o.require(scan.records.size() == s.total_lambdas, "record count differs from the total" + at);

    o.require(s.total_lambdas == expected.total, "total differs from the planted count" + at);
    o.require(s.line_count_histogram == expected.line_histogram, "line histogram differs from the plan" + at);
    o.require(s.param_count_histogram == expected.param_histogram, "parameter histogram differs from the plan" + at);
    o.require(s.explicit_count == expected.explicit_count, "explicit count differs from the plan" + at);
    o.require(s.comment_coverage.above_only == expected.above_only && s.comment_coverage.none == expected.none &&
                  s.comment_coverage.within_only == expected.within_only && s.comment_coverage.both == expected.both,
              "comment coverage differs from the plan" + at);
    o.require(s.occurrences == expected.occurrences, "uniqueness keys differ from the plan" + at);

    jlam::ScanOptions parallel;
    parallel.threads = 2 + static_cast<unsigned>(rng() % 4);
    o.require(jlam::scan_tree(dir.path(), parallel).stats == s, "parallel scan differs from serial" + at);
  }

  testing::TempDir dir;
  std::string file;
  for (int i = 0; i < 7; ++i)
    file += "a(x -> x + " + std::to_string(i) + ");\n";
  for (int i = 0; i < 3; ++i)
    file += "b(() -> {\n  c(" + std::to_string(i) + ");\n});\n";
  testing::write_text(dir / "Planted.java", file);
  const auto s = jlam::scan_tree(dir.path()).stats;
  const auto share = [&](std::size_t k) {
    const auto it = s.line_count_histogram.find(k);
    return it == s.line_count_histogram.end() ? 0.0 : 100.0 * static_cast<double>(it->second) /
                                                          static_cast<double>(s.total_lambdas);
  };
  o.require(s.total_lambdas == 10 && share(1) == 70.0 && share(3) == 30.0, "planted 7/3 split not reported as 70/30");
  if (o.pass)
    o.detail = std::to_string(cases) + " random corpora conserved, parallel == serial, planted split 70%/30%";
  return o;
}

Outcome normalization()
{
  Outcome o;
  std::mt19937 rng(5);
  const std::vector<std::string> pieces = {" ", "\t", "\n", "\r\n", "\xC2\xA0", "\xE3\x80\x80", "a", "->", "(",
                                           ")", "λ", "\xFF", "\xC2", "x"};
  for (int i = 0; i < 2000; ++i) {
    std::string s;
    for (int n = static_cast<int>(rng() % 20); n > 0; --n)
      s += pieces[rng() % pieces.size()];
    const std::string once = jlam::normalize_whitespace(s);
    o.require(jlam::normalize_whitespace(once) == once, "not idempotent");
    o.require(once.size() <= s.size(), "normalization grew the text");
  }

  const std::string row1 = testing::split_lines(testing::read_fixture("duplicate_exprs.txt")).at(0);
  const std::string reformatted = "return () -> {\n"
                                  "    try {\n"
                                  "        return task.call();\n"
                                  "    } catch (Exception e) {\n"
                                  "        handle(e);\n"
                                  "        throw e;\n"
                                  "    }\n"
                                  "};\n";
  const auto a = jlam::detect_lambdas(row1).lambdas;
  const auto b = jlam::detect_lambdas(reformatted).lambdas;
  o.require(a.size() == 1 && b.size() == 1, "first duplicate expression not detected once in each rendering");
  if (a.size() == 1 && b.size() == 1) {
    o.require(a[0].raw_text != b[0].raw_text, "renderings should differ");
    o.require(jlam::normalize_whitespace(a[0].raw_text) == jlam::normalize_whitespace(b[0].raw_text),
              "renderings map to different keys");
    jlam::CorpusStats s = jlam::stats_for(a);
    s.merge(jlam::stats_for(b));
    o.require(s.unique_lambdas() == 1, "two renderings counted as two unique lambdas");
  }
  if (o.pass)
    o.detail = "idempotent on 2000 strings; first duplicate expression renderings share one key";
  return o;
}

Outcome span_round_trip()
{
  Outcome o;
  std::vector<std::string> texts = {testing::read_fixture("sample_lambdas.java"),
                                    testing::read_fixture("labeled_source.java"),
                                    testing::read_fixture("duplicate_exprs.txt")};
  for (const auto& row : testing::golden_docs())
    texts.push_back(row.expression);
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i)
    texts.push_back(testing::make_file(rng, "x.java", 8).content);

  std::size_t checked = 0;
  for (const auto& t : texts) {
    const jlam::LexedSource src(t);
    for (const auto& l : jlam::detect_lambdas(src).lambdas) {
      ++checked;
      o.require(std::string(src.source().slice(l.start, l.end)) == l.raw_text, "span mismatch for " + l.raw_text);
    }
  }
  o.require(checked > 100, "too few lambdas checked");
  if (o.pass)
    o.detail = std::to_string(checked) + " lambdas reproduce raw_text from their spans";
  return o;
}

// About 100 KB of Java with a mix of lambdas, comments, strings and switch
// rules.
std::string big_file(std::mt19937& rng, int index)
{
  std::string out = "package perf;\n\nimport java.util.*;\n\n/** Generated file " + std::to_string(index) +
                    ". */\npublic class P" + std::to_string(index) + " {\n";
  int method = 0;
  while (out.size() < 100 * 1024) {
    const std::string m = std::to_string(method++);
    const std::string k = std::to_string(rng() % 50);
    out += "  // Method " + m + " maps values -> results.\n";
    out += "  List<Integer> m" + m + "(List<Integer> in) {\n";
    out += "    String label = \"step -> " + k + "\";\n";
    out += "    in.forEach(v -> System.out.println(v + " + k + "));\n";
    out += "    int r = switch (in.size()) { case 0 -> 1; case 1 -> 2; default -> 3; };\n";
    out += "    for (int i = in.size(); i-->0;) { r += i; }\n";
    out += "    /* a block comment with an arrow -> inside\n       spanning lines */\n";
    out += "    return in.stream()\n";
    out += "        .filter((Integer x) -> x % 2 == 0)\n";
    out += "        .map(x -> {\n";
    out += "          // within\n";
    out += "          return x * " + k + ";\n";
    out += "        })\n";
    out += "        .collect(java.util.stream.Collectors.toList());\n";
    out += "  }\n\n";
  }
  return out + "}\n";
}

Outcome performance()
{
  Outcome o;
  testing::TempDir dir;
  std::mt19937 rng(1000);
  std::uint64_t bytes = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::string content = big_file(rng, i);
    bytes += content.size();
    testing::write_text(dir / ("pkg" + std::to_string(i % 10) + "/P" + std::to_string(i) + ".java"), content);
  }

  std::string reports[2];
  double times[2] = {0, 0};
  for (int run = 0; run < 2; ++run) {
    const auto start = Clock::now();
    const auto scan = jlam::scan_tree(dir.path());
    const auto report = dir.path().parent_path() / (dir.path().filename().string() + "-report" + std::to_string(run) + ".json");
    jlam::write_report(scan.stats, {}, jlam::Format::Json, report);
    times[run] = seconds_since(start);
    reports[run] = testing::read_text(report);
    std::filesystem::remove(report);
    o.require(scan.stats.files_scanned == 1000, "expected 1000 files");
  }
  o.require(times[0] < 10.0 && times[1] < 10.0,
            "scan took " + std::to_string(times[0]) + " s and " + std::to_string(times[1]) + " s");
  o.require(reports[0] == reports[1], "reports differ between runs");
  if (o.pass) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "1000 files, %.1f MB, scans in %.2f s and %.2f s, reports byte-equal",
                  static_cast<double>(bytes) / 1e6, times[0], times[1]);
    o.detail = buf;
  }
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv)
{
  const std::vector<Criterion> criteria = {
      {"golden documentation", golden_docs_suite},
      {"detector accuracy on labeled lines", detector_accuracy},
      {"sample lambdas metadata", sample_metadata},
      {"statistics conservation", conservation},
      {"whitespace normalization", normalization},
      {"span round-trip", span_round_trip},
      {"performance and report determinism", performance},
  };

  std::size_t only = 0;
  if (argc > 1) {
    only = static_cast<std::size_t>(std::strtoul(argv[1], nullptr, 10));
    if (only < 1 || only > criteria.size()) {
      std::fprintf(stderr, "usage: %s [1-%zu]\n", argv[0], criteria.size());
      return 2;
    }
  }

  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && only != i + 1)
      continue;
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
