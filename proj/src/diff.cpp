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

#include <algorithm>
#include <charconv>

#include "jlam/corpus.hpp"

namespace jlam {

std::string_view to_string(LineLabel label) noexcept
{
  return label == LineLabel::LambdaStart ? "LambdaStart" : "NotLambda";
}

std::string_view to_string(LineSource source) noexcept
{
  switch (source) {
  case LineSource::File: return "File";
  case LineSource::DiffAdded: return "DiffAdded";
  case LineSource::DiffRemoved: return "DiffRemoved";
  case LineSource::DiffContext: return "DiffContext";
  }
  return "Unknown";
}

namespace {

// Label and column from the hits of one line; nothing when the line has no
// arrow at all.
std::optional<std::pair<LineLabel, std::size_t>> label_hits(std::span<const ArrowHit> hits)
{
  if (hits.empty())
    return std::nullopt;
  const auto candidate = std::find_if(hits.begin(), hits.end(), [](const ArrowHit& h) { return h.is_candidate(); });
  if (candidate != hits.end())
    return std::pair{LineLabel::LambdaStart, candidate->location.column};
  return std::pair{LineLabel::NotLambda, hits.front().location.column};
}

struct HunkHeader {
  std::size_t old_start = 0, old_count = 1;
  std::size_t new_start = 0, new_count = 1;
};

bool parse_number(std::string_view& s, std::size_t& out)
{
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr == s.data())
    return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return true;
}

// "@@ -a[,b] +c[,d] @@[ section]"
std::optional<HunkHeader> parse_hunk_header(std::string_view line)
{
  HunkHeader h;
  if (!line.starts_with("@@ -"))
    return std::nullopt;
  line.remove_prefix(4);
  if (!parse_number(line, h.old_start))
    return std::nullopt;
  if (line.starts_with(',')) {
    line.remove_prefix(1);
    if (!parse_number(line, h.old_count))
      return std::nullopt;
  }
  if (!line.starts_with(" +"))
    return std::nullopt;
  line.remove_prefix(2);
  if (!parse_number(line, h.new_start))
    return std::nullopt;
  if (line.starts_with(',')) {
    line.remove_prefix(1);
    if (!parse_number(line, h.new_count))
      return std::nullopt;
  }
  if (!line.starts_with(" @@"))
    return std::nullopt;
  return h;
}

// "+++ b/src/Foo.java\t2019-01-01" -> "src/Foo.java"
std::string header_path(std::string_view line)
{
  line.remove_prefix(4);
  if (const auto tab = line.find('\t'); tab != std::string_view::npos)
    line = line.substr(0, tab);
  if (line.starts_with("a/") || line.starts_with("b/"))
    line.remove_prefix(2);
  return std::string(line);
}

[[noreturn]] void malformed(std::size_t line_index, const std::string& why)
{
  throw Error(ErrorCode::MalformedPatch, "line " + std::to_string(line_index + 1) + ": " + why,
              SourceLocation{line_index, 0});
}

} // namespace

std::vector<LineClassification> classify_source_lines(const LexedSource& source)
{
  std::vector<LineClassification> out;
  const auto hits = source.hits();
  auto it = hits.begin();
  while (it != hits.end()) {
    const std::size_t line = it->location.line;
    auto stop = std::find_if(it, hits.end(), [&](const ArrowHit& h) { return h.location.line != line; });
    const auto labeled = label_hits({it, stop});
    LineClassification c;
    c.location = {line, labeled->second};
    c.label = labeled->first;
    c.source = LineSource::File;
    c.input_line = line;
    c.text = std::string(source.source().line(line));
    out.push_back(std::move(c));
    it = stop;
  }
  return out;
}

std::vector<LineClassification> classify_diff_lines(std::string_view patch)
{
  std::vector<LineClassification> out;
  std::string path;
  std::string old_path;
  bool seen_hunk = false;
  bool seen_content = false;
  bool after_hunk = false; // directly after a hunk, before the next header
  std::size_t old_left = 0, new_left = 0;
  std::size_t old_line = 0, new_line = 0; // 0-based, next line on each side

  std::size_t index = 0;
  std::size_t pos = 0;
  while (pos < patch.size()) {
    std::size_t nl = patch.find('\n', pos);
    if (nl == std::string_view::npos)
      nl = patch.size();
    std::string_view line = patch.substr(pos, nl - pos);
    pos = nl + 1;
    if (line.ends_with('\r'))
      line.remove_suffix(1);
    const std::size_t li = index++;
    if (!line.empty())
      seen_content = true;

    if (old_left == 0 && new_left == 0) {
      if (line.starts_with("@@")) {
        const auto h = parse_hunk_header(line);
        if (!h)
          malformed(li, "invalid hunk header '" + std::string(line) + "'");
        seen_hunk = true;
        after_hunk = true;
        old_left = h->old_count;
        new_left = h->new_count;
        old_line = h->old_start > 0 ? h->old_start - 1 : 0;
        new_line = h->new_start > 0 ? h->new_start - 1 : 0;
      } else if (line.starts_with("+++ ")) {
        path = header_path(line);
        if (path == "/dev/null")
          path = old_path;
      } else if (line.starts_with("--- ")) {
        old_path = header_path(line);
        path = old_path;
        after_hunk = false;
      } else if (after_hunk && !line.empty() && line != "-- " && (line.front() == '+' || line.front() == '-' || line.front() == ' ')) {
        malformed(li, "line exceeds hunk length");
      } else {
        after_hunk = false;
      }
      // Other lines between hunks are header material (diff --git, index,
      // mode lines, commit messages) and are ignored.
      continue;
    }

    if (line.starts_with('\\'))
      continue; // "\ No newline at end of file"

    const char marker = line.empty() ? ' ' : line.front();
    LineSource source;
    std::size_t file_line;
    switch (marker) {
    case ' ':
      if (old_left == 0 || new_left == 0)
        malformed(li, "context line exceeds hunk length");
      source = LineSource::DiffContext;
      file_line = new_line++;
      ++old_line;
      --old_left;
      --new_left;
      break;
    case '+':
      if (new_left == 0)
        malformed(li, "added line exceeds hunk length");
      source = LineSource::DiffAdded;
      file_line = new_line++;
      --new_left;
      break;
    case '-':
      if (old_left == 0)
        malformed(li, "removed line exceeds hunk length");
      source = LineSource::DiffRemoved;
      file_line = old_line++;
      --old_left;
      break;
    default:
      malformed(li, "unexpected line in hunk");
    }

    const std::string_view content = line.empty() ? line : line.substr(1);
    if (content.find("->") == std::string_view::npos)
      continue;
    const LineScan scan = scan_line(content, ScanState{}, file_line);
    const auto labeled = label_hits(scan.hits);
    if (!labeled)
      continue; // undecodable line
    LineClassification c;
    c.location = {file_line, labeled->second};
    c.label = labeled->first;
    c.source = source;
    c.input_line = li;
    c.path = path;
    c.text = std::string(content);
    out.push_back(std::move(c));
  }

  if (old_left != 0 || new_left != 0)
    malformed(index == 0 ? 0 : index - 1, "patch ends inside a hunk");
  if (seen_content && !seen_hunk)
    malformed(0, "no hunk header");
  return out;
}

} // namespace jlam
