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

#include "jlam/detect.hpp"

namespace jlam {
namespace {

std::string_view trim(std::string_view s)
{
  while (!s.empty() && is_java_whitespace(s.front()))
    s.remove_prefix(1);
  while (!s.empty() && is_java_whitespace(s.back()))
    s.remove_suffix(1);
  return s;
}

std::string line_comment_text(std::string_view raw)
{
  while (raw.starts_with('/'))
    raw.remove_prefix(1);
  return std::string(trim(raw));
}

// Strips /* */ (and the extra star of /**), then a leading run of '*' on
// each line. Blank lines at either end are dropped.
std::string block_comment_text(std::string_view raw)
{
  raw.remove_prefix(2);
  if (raw.ends_with("*/"))
    raw.remove_suffix(2);
  while (raw.starts_with('*'))
    raw.remove_prefix(1);

  std::vector<std::string_view> lines;
  std::size_t b = 0;
  for (std::size_t i = 0; i <= raw.size(); ++i) {
    if (i == raw.size() || raw[i] == '\n' || raw[i] == '\r') {
      std::string_view line = trim(raw.substr(b, i - b));
      while (line.starts_with('*'))
        line.remove_prefix(1);
      lines.push_back(trim(line));
      if (i + 1 < raw.size() && raw[i] == '\r' && raw[i + 1] == '\n')
        ++i;
      b = i + 1;
    }
  }
  while (!lines.empty() && lines.back().empty())
    lines.pop_back();
  auto first = std::find_if(lines.begin(), lines.end(), [](std::string_view l) { return !l.empty(); });

  std::string out;
  for (auto it = first; it != lines.end(); ++it) {
    if (!out.empty() || it != first)
      out += '\n';
    out += *it;
  }
  return out;
}

bool only_whitespace(std::string_view s)
{
  return std::all_of(s.begin(), s.end(), is_java_whitespace);
}

} // namespace

std::vector<SourceComment> collect_comments(const LexedSource& src)
{
  const std::string_view text = src.text();
  const SourceText& source = src.source();
  std::vector<SourceComment> out;

  std::size_t k = 0;
  while (k < text.size()) {
    const Lexeme cls = src.class_at(k);
    if (!is_comment(cls)) {
      ++k;
      continue;
    }
    SourceComment c;
    c.begin_offset = k;
    std::size_t e = k + 2;
    if (cls == Lexeme::LineComment) {
      c.kind = SourceComment::Kind::Line;
      while (e < text.size() && src.class_at(e) == Lexeme::LineComment)
        ++e;
    } else {
      c.kind = SourceComment::Kind::Block;
      while (e < text.size() && src.class_at(e) == Lexeme::BlockComment &&
             !(text[e - 2] == '*' && text[e - 1] == '/' && e - 2 > k))
        ++e;
    }
    e = std::min(e, text.size());
    c.end_offset = e;
    c.start = source.location_of(c.begin_offset);
    c.end = source.location_of(e - 1);

    const std::size_t first_line_begin = source.line_start(c.start.line);
    const std::size_t last_line_end = source.line_end(c.end.line);
    c.whole_line = only_whitespace(text.substr(first_line_begin, c.begin_offset - first_line_begin)) &&
                   (e >= last_line_end || only_whitespace(text.substr(e, last_line_end - e)));

    const std::string_view raw = text.substr(c.begin_offset, e - c.begin_offset);
    c.text = c.kind == SourceComment::Kind::Line ? line_comment_text(raw) : block_comment_text(raw);
    out.push_back(std::move(c));
    k = e;
  }
  return out;
}

std::vector<LambdaComment> associate_comments(const LexedSource& src,
                                              std::span<const SourceComment> comments,
                                              const LambdaExpression& lambda)
{
  (void)src;
  std::vector<LambdaComment> out;

  if (lambda.start.line > 0) {
    const std::size_t target = lambda.start.line - 1;
    // First comment ending on or after the target line.
    auto it = std::lower_bound(comments.begin(), comments.end(), target,
                               [](const SourceComment& c, std::size_t line) { return c.end.line < line; });
    // The adjacent comment is the last one ending on the target line.
    auto adj = comments.end();
    for (; it != comments.end() && it->end.line == target; ++it)
      adj = it;
    if (adj != comments.end() && adj->whole_line) {
      if (adj->kind == SourceComment::Kind::Block) {
        out.push_back({CommentPlacement::Above, adj->text, adj->start});
      } else {
        auto first = adj;
        while (first != comments.begin()) {
          auto prev = first - 1;
          if (prev->kind != SourceComment::Kind::Line || !prev->whole_line ||
              prev->end.line + 1 != first->start.line)
            break;
          first = prev;
        }
        std::string text;
        for (auto c = first; c != adj + 1; ++c) {
          if (c != first)
            text += '\n';
          text += c->text;
        }
        out.push_back({CommentPlacement::Above, std::move(text), first->start});
      }
    }
  }

  if (lambda.body_kind == BodyKind::MultiLine) {
    auto it = std::upper_bound(comments.begin(), comments.end(), lambda.begin_offset,
                               [](std::size_t off, const SourceComment& c) { return off < c.begin_offset; });
    for (; it != comments.end() && it->end_offset <= lambda.end_offset; ++it)
      out.push_back({CommentPlacement::Within, it->text, it->start});
  }
  return out;
}

std::vector<LambdaComment> associate_comments(const LexedSource& src, const LambdaExpression& lambda)
{
  const std::vector<SourceComment> comments = collect_comments(src);
  return associate_comments(src, comments, lambda);
}

} // namespace jlam
