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

#include <doctest.h>

#include <random>

#include "jlam/corpus.hpp"
#include "test_support.hpp"

namespace {

void check_matches(const jlam::CorpusStats& s, const testing::ExpectedStats& e)
{
  CHECK(s.files_scanned == e.files);
  CHECK(s.files_with_lambdas == e.files_with_lambdas);
  CHECK(s.total_lambdas == e.total);
  CHECK(s.line_count_histogram == e.line_histogram);
  CHECK(s.param_count_histogram == e.param_histogram);
  CHECK(s.explicit_count == e.explicit_count);
  CHECK(s.implicit_count == e.implicit_count);
  CHECK(s.comment_coverage.none == e.none);
  CHECK(s.comment_coverage.above_only == e.above_only);
  CHECK(s.comment_coverage.within_only == e.within_only);
  CHECK(s.comment_coverage.both == e.both);
  CHECK(s.occurrences == e.occurrences);
}

} // namespace

TEST_CASE("normalize_whitespace")
{
  CHECK(jlam::normalize_whitespace("(x, y) ->  x") == "(x,y)->x");
  CHECK(jlam::normalize_whitespace("a\tb\r\nc\fd") == "abcd");
  CHECK(jlam::normalize_whitespace("a b c　d") == "abcd");
  CHECK(jlam::normalize_whitespace("λ x") == "λx");
  CHECK(jlam::normalize_whitespace("") == "");
}

TEST_CASE("normalize_whitespace is idempotent and never grows")
{
  std::mt19937 rng(7);
  const std::string alphabet = " \t\nab->(){};\xC2\xA0";
  for (int i = 0; i < 500; ++i) {
    std::string s;
    for (int n = static_cast<int>(rng() % 30); n > 0; --n)
      s += alphabet[rng() % alphabet.size()];
    const std::string once = jlam::normalize_whitespace(s);
    CHECK(jlam::normalize_whitespace(once) == once);
    CHECK(once.size() <= s.size());
  }
}

TEST_CASE("empty directory")
{
  testing::TempDir dir;
  const auto scan = jlam::scan_tree(dir.path());
  CHECK(scan.stats == jlam::CorpusStats{});
}

TEST_CASE("missing root is an I/O error")
{
  testing::TempDir dir;
  CHECK_THROWS_AS(jlam::scan_tree(dir / "absent"), jlam::Error);
}

TEST_CASE("ten files with the explicit sample lambda")
{
  testing::TempDir dir;
  for (int i = 0; i < 10; ++i)
    testing::write_text(dir / ("F" + std::to_string(i) + ".java"), "class F { Object o = (int x) -> x + 1; }\n");
  const auto s = jlam::scan_tree(dir.path()).stats;
  CHECK(s.total_lambdas == 10);
  CHECK(s.unique_lambdas() == 1);
  CHECK(s.explicit_count == 10);
  CHECK(s.line_count_histogram == std::map<std::size_t, std::uint64_t>{{1, 10}});
}

TEST_CASE("the golden documentation expressions in one file")
{
  testing::TempDir dir;
  std::string file;
  for (const auto& row : testing::golden_docs())
    file += row.expression + "\n";
  testing::write_text(dir / "T.java", file);
  const auto s = jlam::scan_tree(dir.path()).stats;
  CHECK(s.total_lambdas == 5);
  CHECK(s.param_count_histogram == std::map<std::size_t, std::uint64_t>{{0, 1}, {1, 3}, {2, 1}});
}

TEST_CASE("duplicate expression duplicates")
{
  testing::TempDir dir;
  const std::string rows = testing::read_fixture("duplicate_exprs.txt");
  for (int i = 0; i < 7; ++i)
    testing::write_text(dir / ("R" + std::to_string(i) + ".java"), rows);
  const auto s = jlam::scan_tree(dir.path()).stats;
  CHECK(s.total_lambdas == 21);
  CHECK(s.unique_lambdas() == 3);
  const auto dups = s.duplicates();
  REQUIRE(dups.size() == 3);
  for (const auto& d : dups)
    CHECK(d.count == 7);
  CHECK(s.exception_unique_fraction() == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("uniqueness keys differ only by whitespace")
{
  const auto s = jlam::stats_for(jlam::detect_lambdas("f(x -> x+1);\ng(x  ->  x + 1);\nh(X -> X+1);").lambdas);
  CHECK(s.total_lambdas == 3);
  CHECK(s.unique_lambdas() == 2);
}

TEST_CASE("exception check ignores case")
{
  const auto s = jlam::stats_for(
      jlam::detect_lambdas("a(e -> new IOException(e));\nb(e -> EXCEPTION);\nc(e -> e);\nd(e -> f(e));").lambdas);
  CHECK(s.exception_unique_fraction() == doctest::Approx(0.5));
}

TEST_CASE("synthetic corpora match the generator's plan")
{
  std::mt19937 rng(42);
  for (int round = 0; round < 20; ++round) {
    testing::TempDir dir;
    const auto files = testing::make_tree(rng, dir.path(), 1 + static_cast<int>(rng() % 15));
    const auto expected = testing::expected_for(files);
    jlam::ScanOptions serial;
    serial.threads = 1;
    const auto s = jlam::scan_tree(dir.path(), serial).stats;
    check_matches(s, expected);
    jlam::ScanOptions parallel;
    parallel.threads = 4;
    CHECK(jlam::scan_tree(dir.path(), parallel).stats == s);
  }
}

TEST_CASE("planted proportions")
{
  testing::TempDir dir;
  std::string file;
  for (int i = 0; i < 7; ++i)
    file += "a(x -> x + " + std::to_string(i) + ");\n";
  for (int i = 0; i < 3; ++i)
    file += "b(() -> {\n  c(" + std::to_string(i) + ");\n});\n";
  testing::write_text(dir / "P.java", file);
  const auto s = jlam::scan_tree(dir.path()).stats;
  REQUIRE(s.total_lambdas == 10);
  CHECK(s.line_count_histogram.at(1) * 100 / s.total_lambdas == 70);
  CHECK(s.line_count_histogram.at(3) * 100 / s.total_lambdas == 30);
}

TEST_CASE("merge is associative and commutative")
{
  std::mt19937 rng(3);
  for (int round = 0; round < 30; ++round) {
    std::vector<jlam::CorpusStats> parts;
    for (int i = 0; i < 3; ++i) {
      const auto f = testing::make_file(rng, "x.java", static_cast<int>(rng() % 5));
      parts.push_back(jlam::stats_for(jlam::detect_lambdas(f.content).lambdas));
      if (rng() % 2)
        parts.back().add_skipped({"s" + std::to_string(rng() % 5), "unreadable"});
    }
    jlam::CorpusStats ab = parts[0];
    ab.merge(parts[1]);
    jlam::CorpusStats ab_c = ab;
    ab_c.merge(parts[2]);
    jlam::CorpusStats bc = parts[1];
    bc.merge(parts[2]);
    jlam::CorpusStats a_bc = parts[0];
    a_bc.merge(bc);
    CHECK(ab_c == a_bc);
    jlam::CorpusStats ba = parts[1];
    ba.merge(parts[0]);
    CHECK(ab == ba);
  }
}

TEST_CASE("hidden directories, other globs and symlinks")
{
  testing::TempDir dir;
  testing::write_text(dir / "A.java", "f(x -> x);\n");
  testing::write_text(dir / ".git/B.java", "f(x -> x);\n");
  testing::write_text(dir / "C.kt", "f(x -> x);\n");
  std::error_code ec;
  std::filesystem::create_directory_symlink(dir.path(), dir / "loop", ec);
  CHECK(jlam::scan_tree(dir.path()).stats.files_scanned == 1);

  jlam::ScanOptions hidden;
  hidden.include_hidden = true;
  CHECK(jlam::scan_tree(dir.path(), hidden).stats.files_scanned == 2);

  jlam::ScanOptions all;
  all.glob = "*";
  CHECK(jlam::scan_tree(dir.path(), all).stats.files_scanned == 2);
}

TEST_CASE("records use relative paths in sorted order")
{
  testing::TempDir dir;
  testing::write_text(dir / "b/Z.java", "f(x -> x);\ng(y -> y);\n");
  testing::write_text(dir / "a/Y.java", "h(z -> z);\n");
  jlam::ScanOptions opts;
  opts.keep_records = true;
  opts.threads = 2;
  const auto scan = jlam::scan_tree(dir.path(), opts);
  REQUIRE(scan.records.size() == 3);
  CHECK(scan.records[0].path == "a/Y.java");
  CHECK(scan.records[1].path == "b/Z.java");
  CHECK(scan.records[1].lambda.raw_text == "x -> x");
  CHECK(scan.records[2].lambda.raw_text == "y -> y");
}

TEST_CASE("unreadable files are skipped")
{
  if (::geteuid() == 0)
    return; // permissions do not bind root
  testing::TempDir dir;
  testing::write_text(dir / "A.java", "f(x -> x);\n");
  std::filesystem::permissions(dir / "A.java", std::filesystem::perms::none);
  const auto s = jlam::scan_tree(dir.path()).stats;
  CHECK(s.skipped.size() == 1);
}
