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

#include "jlam/scan.hpp"

#include <algorithm>

namespace jlam {

std::string_view to_string(ArrowContext context) noexcept
{
  switch (context) {
  case ArrowContext::Code: return "Code";
  case ArrowContext::Comment: return "Comment";
  case ArrowContext::String: return "String";
  case ArrowContext::CharLiteral: return "CharLiteral";
  case ArrowContext::SwitchCaseArrow: return "SwitchCaseArrow";
  case ArrowContext::DecrementGt: return "DecrementGt";
  }
  return "Unknown";
}

bool is_java_whitespace(char c) noexcept
{
  return c == ' ' || c == '\t' || c == '\f' || c == '\n' || c == '\r' || c == '\v';
}

bool is_identifier_start(char c) noexcept
{
  const auto u = static_cast<unsigned char>(c);
  return (u >= 'a' && u <= 'z') || (u >= 'A' && u <= 'Z') || u == '_' || u == '$' || u >= 0x80;
}

bool is_identifier_part(char c) noexcept
{
  return is_identifier_start(c) || (c >= '0' && c <= '9');
}

namespace {

enum class Mode { Code, BlockComment, String, Char, TextBlock };

// Column bookkeeping for hits: columns are code points, computed
// incrementally since hits arrive left to right.
class ColumnCounter {
public:
  explicit ColumnCounter(std::string_view line) : line_(line) {}

  std::size_t column_at(std::size_t byte)
  {
    column_ += utf8::column_count(line_.substr(byte_, byte - byte_));
    byte_ = byte;
    return column_;
  }

private:
  std::string_view line_;
  std::size_t byte_ = 0;
  std::size_t column_ = 0;
};

bool starts_with_at(std::string_view s, std::size_t i, std::string_view prefix)
{
  return s.substr(i, prefix.size()) == prefix;
}

} // namespace

ScanState lex_line(std::string_view line, ScanState state, std::size_t line_number,
                   std::span<Lexeme> classes, std::vector<ArrowHit>& hits)
{
  const std::size_t first_hit = hits.size();
  const std::size_t n = line.size();
  Mode mode = state.in_block_comment ? Mode::BlockComment
            : state.in_text_block  ? Mode::TextBlock
                                   : Mode::Code;
  ColumnCounter columns(line);
  // Set once a `case`/`default` keyword is seen in the current label segment;
  // a segment ends at ; { } : (not ::) and at an arrow.
  bool case_label = false;

  auto add_hit = [&](std::size_t i, ArrowContext ctx) {
    hits.push_back(ArrowHit{{line_number, columns.column_at(i)}, ctx, i});
  };
  auto arrow_at = [&](std::size_t i) { return line[i] == '-' && i + 1 < n && line[i + 1] == '>'; };

  std::size_t i = 0;
  while (i < n) {
    const char c = line[i];
    switch (mode) {
    case Mode::Code: {
      const char next = i + 1 < n ? line[i + 1] : '\0';
      if (c == '/' && next == '/') {
        std::fill(classes.begin() + static_cast<std::ptrdiff_t>(i), classes.end(), Lexeme::LineComment);
        for (std::size_t k = i + 2; k + 1 < n; ++k)
          if (arrow_at(k))
            add_hit(k, ArrowContext::Comment);
        i = n;
        break;
      }
      if (c == '/' && next == '*') {
        classes[i] = classes[i + 1] = Lexeme::BlockComment;
        i += 2;
        mode = Mode::BlockComment;
        break;
      }
      if (c == '"') {
        if (starts_with_at(line, i, R"(""")")) {
          classes[i] = classes[i + 1] = classes[i + 2] = Lexeme::TextBlock;
          i += 3;
          mode = Mode::TextBlock;
        } else {
          classes[i++] = Lexeme::String;
          mode = Mode::String;
        }
        break;
      }
      if (c == '\'') {
        classes[i++] = Lexeme::Char;
        mode = Mode::Char;
        break;
      }
      if (c == '-' && next == '>') {
        ArrowContext ctx = ArrowContext::Code;
        if (i > 0 && line[i - 1] == '-')
          ctx = ArrowContext::DecrementGt;
        else if (case_label)
          ctx = ArrowContext::SwitchCaseArrow;
        add_hit(i, ctx);
        classes[i] = classes[i + 1] = Lexeme::Code;
        i += 2;
        case_label = false;
        break;
      }
      if (is_identifier_start(c)) {
        std::size_t j = i + 1;
        while (j < n && is_identifier_part(line[j]))
          ++j;
        const std::string_view word = line.substr(i, j - i);
        if (word == "case" || word == "default")
          case_label = true;
        std::fill(classes.begin() + static_cast<std::ptrdiff_t>(i),
                  classes.begin() + static_cast<std::ptrdiff_t>(j), Lexeme::Code);
        i = j;
        break;
      }
      if (c >= '0' && c <= '9') {
        // Numeric literals may contain letters (0x1F, 1e5, 10L); consume
        // them so a digit-led run never reads as a keyword.
        std::size_t j = i + 1;
        while (j < n && (is_identifier_part(line[j]) || line[j] == '.'))
          ++j;
        std::fill(classes.begin() + static_cast<std::ptrdiff_t>(i),
                  classes.begin() + static_cast<std::ptrdiff_t>(j), Lexeme::Code);
        i = j;
        break;
      }
      if (c == ';' || c == '{' || c == '}')
        case_label = false;
      else if (c == ':') {
        if (next == ':') {
          classes[i] = classes[i + 1] = Lexeme::Code;
          i += 2;
          break;
        }
        case_label = false;
      }
      classes[i++] = Lexeme::Code;
      break;
    }
    case Mode::BlockComment:
      if (arrow_at(i))
        add_hit(i, ArrowContext::Comment);
      if (c == '*' && i + 1 < n && line[i + 1] == '/') {
        classes[i] = classes[i + 1] = Lexeme::BlockComment;
        i += 2;
        mode = Mode::Code;
      } else {
        classes[i++] = Lexeme::BlockComment;
      }
      break;
    case Mode::String:
    case Mode::Char: {
      const char quote = mode == Mode::String ? '"' : '\'';
      const Lexeme cls = mode == Mode::String ? Lexeme::String : Lexeme::Char;
      if (arrow_at(i))
        add_hit(i, mode == Mode::String ? ArrowContext::String : ArrowContext::CharLiteral);
      if (c == '\\' && i + 1 < n) {
        classes[i] = classes[i + 1] = cls;
        // An escaped '-' can still begin an arrow ("\->" is not valid Java,
        // but the arrow is inside the literal either way).
        if (arrow_at(i + 1))
          add_hit(i + 1, mode == Mode::String ? ArrowContext::String : ArrowContext::CharLiteral);
        i += 2;
        break;
      }
      classes[i++] = cls;
      if (c == quote)
        mode = Mode::Code;
      break;
    }
    case Mode::TextBlock:
      if (arrow_at(i))
        add_hit(i, ArrowContext::String);
      if (c == '\\' && i + 1 < n) {
        classes[i] = classes[i + 1] = Lexeme::TextBlock;
        if (arrow_at(i + 1))
          add_hit(i + 1, ArrowContext::String);
        i += 2;
        break;
      }
      if (starts_with_at(line, i, R"(""")")) {
        classes[i] = classes[i + 1] = classes[i + 2] = Lexeme::TextBlock;
        i += 3;
        mode = Mode::Code;
        break;
      }
      classes[i++] = Lexeme::TextBlock;
      break;
    }
  }

  if (!utf8::is_valid(line))
    hits.resize(first_hit);

  // String and char literals cannot span lines; an unterminated one ends here.
  return ScanState{mode == Mode::BlockComment, mode == Mode::TextBlock};
}

LineScan scan_line(std::string_view line, ScanState state, std::size_t line_number)
{
  LineScan out;
  std::vector<Lexeme> classes(line.size());
  out.state = lex_line(line, state, line_number, classes, out.hits);
  return out;
}

std::vector<ArrowHit> scan_text(std::string_view text)
{
  const LexedSource lexed{std::string(text)};
  return {lexed.hits().begin(), lexed.hits().end()};
}

LexedSource::LexedSource(std::string text) : LexedSource(SourceText(std::move(text))) {}

LexedSource::LexedSource(SourceText source) : source_(std::move(source))
{
  lex();
}

void LexedSource::lex()
{
  const std::string_view text = source_.text();
  classes_.assign(text.size(), Lexeme::Code);
  ScanState state;
  const std::size_t lines = text.empty() ? 0 : source_.line_count();
  for (std::size_t l = 0; l < lines; ++l) {
    const std::size_t b = source_.line_start(l);
    const std::size_t e = source_.line_end(l);
    state = lex_line(text.substr(b, e - b), state, l,
                     std::span<Lexeme>(classes_).subspan(b, e - b), hits_);
    const std::size_t next = l + 1 < lines ? source_.line_start(l + 1) : text.size();
    const Lexeme term = state.in_block_comment ? Lexeme::BlockComment
                      : state.in_text_block  ? Lexeme::TextBlock
                                             : Lexeme::Code;
    std::fill(classes_.begin() + static_cast<std::ptrdiff_t>(e),
              classes_.begin() + static_cast<std::ptrdiff_t>(next), term);
  }
}

bool LexedSource::is_significant(std::size_t offset) const noexcept
{
  if (offset >= classes_.size())
    return false;
  const Lexeme cls = classes_[offset];
  if (is_comment(cls))
    return false;
  return cls != Lexeme::Code || !is_java_whitespace(source_.text()[offset]);
}

} // namespace jlam
