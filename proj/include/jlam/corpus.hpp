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

#ifndef JLAM_CORPUS_HPP
#define JLAM_CORPUS_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jlam/detect.hpp"

namespace jlam {

/// Removes every whitespace code point and every byte that is not valid
/// UTF-8. Used for uniqueness keys only.
std::string normalize_whitespace(std::string_view text);

struct CommentCoverage {
  std::uint64_t none = 0;
  std::uint64_t above_only = 0;
  std::uint64_t within_only = 0;
  std::uint64_t both = 0;

  std::uint64_t total() const noexcept { return none + above_only + within_only + both; }
  friend bool operator==(const CommentCoverage&, const CommentCoverage&) = default;
};

struct SkippedFile {
  std::string path;
  std::string reason;

  friend auto operator<=>(const SkippedFile&, const SkippedFile&) = default;
};

struct DuplicateEntry {
  std::string text; // normalized
  std::uint64_t count = 0;

  friend bool operator==(const DuplicateEntry&, const DuplicateEntry&) = default;
};

/// Aggregate usage and documentation counts over a set of files. merge() is
/// associative and commutative, so partial results can be combined in any
/// order.
struct CorpusStats {
  std::uint64_t files_scanned = 0;
  std::uint64_t files_with_lambdas = 0;
  std::uint64_t total_lambdas = 0;
  std::map<std::size_t, std::uint64_t> line_count_histogram;
  std::map<std::size_t, std::uint64_t> param_count_histogram;
  std::uint64_t explicit_count = 0;
  std::uint64_t implicit_count = 0;
  CommentCoverage comment_coverage;
  std::map<std::string, std::uint64_t> occurrences; // normalized text -> count
  std::vector<SkippedFile> skipped;                 // kept sorted

  void add_file(std::span<const LambdaExpression> lambdas);
  void add_skipped(SkippedFile file);
  void merge(const CorpusStats& other);

  std::uint64_t unique_lambdas() const noexcept { return occurrences.size(); }
  /// Share of unique lambdas whose normalized text contains "exception",
  /// ignoring case; 0 when there are none.
  double exception_unique_fraction() const;
  /// Normalized texts seen more than once, most frequent first.
  std::vector<DuplicateEntry> duplicates() const;

  friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

struct LambdaRecord {
  std::string path;
  LambdaExpression lambda;
};

struct ScanOptions {
  std::string glob = "*.java"; // matched against file names
  unsigned threads = 0;        // 0: one per hardware thread
  bool include_hidden = false; // descend into dot-directories
  bool keep_records = false;
};

struct CorpusScan {
  CorpusStats stats;
  std::vector<LambdaRecord> records; // by path, then document order
};

/// Detects lambdas in every matching file under `root`. Unreadable files
/// are recorded in stats.skipped. Symbolic links are not followed. Throws
/// Error(Io) if `root` is not a readable directory.
CorpusScan scan_tree(const std::filesystem::path& root, const ScanOptions& options = {});

/// Detection for a single in-memory file, as scan_tree aggregates it.
CorpusStats stats_for(std::span<const LambdaExpression> lambdas);

// --- line classification --------------------------------------------------

enum class LineLabel { LambdaStart, NotLambda };
enum class LineSource { File, DiffAdded, DiffRemoved, DiffContext };

std::string_view to_string(LineLabel label) noexcept;
std::string_view to_string(LineSource source) noexcept;

struct LineClassification {
  SourceLocation location; // line in the file (new side, or old side for removals); column of the first arrow
  LineLabel label = LineLabel::NotLambda;
  LineSource source = LineSource::File;
  std::size_t input_line = 0; // 0-based line in the scanned text or patch
  std::string path;           // from the +++/--- header in diff mode
  std::string text;           // the line without its diff marker
};

/// One entry per line that contains "->" in any context. LambdaStart when a
/// candidate arrow is on the line, with state carried across lines.
std::vector<LineClassification> classify_source_lines(const LexedSource& source);

/// Unified-diff mode. Each added, removed or context line containing "->" is
/// scanned on its own from a fresh state. Throws Error(MalformedPatch).
std::vector<LineClassification> classify_diff_lines(std::string_view patch);

} // namespace jlam

#endif // JLAM_CORPUS_HPP
