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

#include "jlam/corpus.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

namespace jlam {

namespace fs = std::filesystem;

namespace {

bool is_whitespace_code_point(char32_t cp)
{
  switch (cp) {
  case U' ': case U'\t': case U'\n': case U'\v': case U'\f': case U'\r':
  case 0x1C: case 0x1D: case 0x1E: case 0x1F:
  case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
  case 0x202F: case 0x205F: case 0x3000:
    return true;
  default:
    return cp >= 0x2000 && cp <= 0x200A;
  }
}

bool contains_exception(std::string_view s)
{
  constexpr std::string_view needle = "exception";
  if (s.size() < needle.size())
    return false;
  for (std::size_t i = 0; i + needle.size() <= s.size(); ++i) {
    std::size_t k = 0;
    while (k < needle.size()) {
      char c = s[i + k];
      if (c >= 'A' && c <= 'Z')
        c = static_cast<char>(c - 'A' + 'a');
      if (c != needle[k])
        break;
      ++k;
    }
    if (k == needle.size())
      return true;
  }
  return false;
}

template <typename Map>
void add_all(Map& into, const Map& from)
{
  for (const auto& [key, count] : from)
    into[key] += count;
}

struct FileResult {
  std::size_t index = 0;
  std::vector<LambdaExpression> lambdas;
};

} // namespace

std::string normalize_whitespace(std::string_view text)
{
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto b = static_cast<unsigned char>(text[i]);
    if (b < 0x80) {
      if (!is_whitespace_code_point(b))
        out += text[i];
      ++i;
      continue;
    }
    // Invalid bytes are dropped too, so that removing whitespace never joins
    // fragments into a new sequence.
    const std::size_t start = i;
    if (utf8::valid_sequence_at(text, i) == 0) {
      ++i;
      continue;
    }
    const char32_t cp = utf8::decode(text, i);
    if (!is_whitespace_code_point(cp))
      out.append(text.substr(start, i - start));
  }
  return out;
}

void CorpusStats::add_file(std::span<const LambdaExpression> lambdas)
{
  ++files_scanned;
  if (!lambdas.empty())
    ++files_with_lambdas;
  for (const LambdaExpression& l : lambdas) {
    ++total_lambdas;
    ++line_count_histogram[l.line_count];
    ++param_count_histogram[l.param_count];
    ++(l.typing == Typing::Explicit ? explicit_count : implicit_count);
    const bool above = l.has_above_comment();
    const bool within = l.has_within_comment();
    if (above && within)
      ++comment_coverage.both;
    else if (above)
      ++comment_coverage.above_only;
    else if (within)
      ++comment_coverage.within_only;
    else
      ++comment_coverage.none;
    ++occurrences[normalize_whitespace(l.raw_text)];
  }
}

void CorpusStats::add_skipped(SkippedFile file)
{
  skipped.insert(std::upper_bound(skipped.begin(), skipped.end(), file), std::move(file));
}

void CorpusStats::merge(const CorpusStats& other)
{
  files_scanned += other.files_scanned;
  files_with_lambdas += other.files_with_lambdas;
  total_lambdas += other.total_lambdas;
  add_all(line_count_histogram, other.line_count_histogram);
  add_all(param_count_histogram, other.param_count_histogram);
  explicit_count += other.explicit_count;
  implicit_count += other.implicit_count;
  comment_coverage.none += other.comment_coverage.none;
  comment_coverage.above_only += other.comment_coverage.above_only;
  comment_coverage.within_only += other.comment_coverage.within_only;
  comment_coverage.both += other.comment_coverage.both;
  add_all(occurrences, other.occurrences);
  std::vector<SkippedFile> merged;
  merged.reserve(skipped.size() + other.skipped.size());
  std::merge(skipped.begin(), skipped.end(), other.skipped.begin(), other.skipped.end(),
             std::back_inserter(merged));
  skipped = std::move(merged);
}

double CorpusStats::exception_unique_fraction() const
{
  if (occurrences.empty())
    return 0.0;
  const auto hits = std::count_if(occurrences.begin(), occurrences.end(),
                                  [](const auto& kv) { return contains_exception(kv.first); });
  return static_cast<double>(hits) / static_cast<double>(occurrences.size());
}

std::vector<DuplicateEntry> CorpusStats::duplicates() const
{
  std::vector<DuplicateEntry> out;
  for (const auto& [text, count] : occurrences)
    if (count > 1)
      out.push_back({text, count});
  std::stable_sort(out.begin(), out.end(),
                   [](const DuplicateEntry& a, const DuplicateEntry& b) { return a.count > b.count; });
  return out;
}

CorpusStats stats_for(std::span<const LambdaExpression> lambdas)
{
  CorpusStats s;
  s.add_file(lambdas);
  return s;
}

CorpusScan scan_tree(const fs::path& root, const ScanOptions& options)
{
  std::error_code ec;
  if (!fs::is_directory(root, ec))
    throw Error(ErrorCode::Io, "not a readable directory: '" + root.string() + "'");

  CorpusScan out;
  std::vector<fs::path> files;
  auto it = fs::recursive_directory_iterator(root, fs::directory_options::skip_permission_denied, ec);
  if (ec)
    throw Error(ErrorCode::Io, "cannot open '" + root.string() + "': " + ec.message());
  for (const auto end = fs::recursive_directory_iterator(); it != end;) {
    const fs::directory_entry& entry = *it;
    std::error_code probe;
    const std::string name = entry.path().filename().string();
    if (entry.is_symlink(probe)) {
      // not followed
    } else if (entry.is_directory(probe)) {
      if (!options.include_hidden && name.starts_with('.'))
        it.disable_recursion_pending();
    } else if (entry.is_regular_file(probe) && ::fnmatch(options.glob.c_str(), name.c_str(), 0) == 0) {
      files.push_back(entry.path());
    }
    const fs::path current = entry.path();
    it.increment(ec);
    if (ec) {
      out.stats.add_skipped({current.lexically_relative(root).generic_string(), ec.message()});
      break;
    }
  }
  std::sort(files.begin(), files.end());

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(files.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::vector<CorpusStats> partial(threads);
  std::vector<std::vector<FileResult>> kept(threads);

  auto worker = [&](unsigned w) {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      const fs::path& path = files[i];
      const std::string rel = path.lexically_relative(root).generic_string();
      std::ifstream in(path, std::ios::binary);
      std::string content;
      if (in) {
        in.seekg(0, std::ios::end);
        const auto size = in.tellg();
        in.seekg(0, std::ios::beg);
        if (size >= 0) {
          content.resize(static_cast<std::size_t>(size));
          in.read(content.data(), size);
        }
      }
      if (!in) {
        partial[w].add_skipped({rel, "cannot read file"});
        continue;
      }
      Detection d = detect_lambdas(LexedSource(std::move(content)));
      partial[w].add_file(d.lambdas);
      if (options.keep_records && !d.lambdas.empty())
        kept[w].push_back({i, std::move(d.lambdas)});
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back(worker, w);
  }

  for (const CorpusStats& s : partial)
    out.stats.merge(s);

  if (options.keep_records) {
    std::vector<FileResult> all;
    for (auto& v : kept)
      std::move(v.begin(), v.end(), std::back_inserter(all));
    std::sort(all.begin(), all.end(), [](const FileResult& a, const FileResult& b) { return a.index < b.index; });
    for (FileResult& f : all) {
      const std::string rel = files[f.index].lexically_relative(root).generic_string();
      for (LambdaExpression& l : f.lambdas)
        out.records.push_back({rel, std::move(l)});
    }
  }
  return out;
}

} // namespace jlam
