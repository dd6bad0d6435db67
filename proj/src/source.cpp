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

#include "jlam/source.hpp"

#include <algorithm>
#include <stdexcept>

namespace jlam {
namespace utf8 {

std::size_t sequence_length(unsigned char lead) noexcept
{
  if (lead < 0x80)
    return 1;
  if (lead >= 0xC2 && lead <= 0xDF)
    return 2;
  if (lead >= 0xE0 && lead <= 0xEF)
    return 3;
  if (lead >= 0xF0 && lead <= 0xF4)
    return 4;
  return 0;
}

std::size_t valid_sequence_at(std::string_view text, std::size_t pos) noexcept
{
  const auto lead = static_cast<unsigned char>(text[pos]);
  const std::size_t len = sequence_length(lead);
  if (len <= 1 || pos + len > text.size())
    return len == 1 ? 1 : 0;

  const auto b1 = static_cast<unsigned char>(text[pos + 1]);
  // Overlong and surrogate exclusions live in the second byte's range.
  unsigned char lo = 0x80, hi = 0xBF;
  if (lead == 0xE0)
    lo = 0xA0;
  else if (lead == 0xED)
    hi = 0x9F;
  else if (lead == 0xF0)
    lo = 0x90;
  else if (lead == 0xF4)
    hi = 0x8F;
  if (b1 < lo || b1 > hi)
    return 0;
  for (std::size_t k = 2; k < len; ++k) {
    const auto b = static_cast<unsigned char>(text[pos + k]);
    if ((b & 0xC0) != 0x80)
      return 0;
  }
  return len;
}

bool is_valid(std::string_view text) noexcept
{
  std::size_t i = 0;
  while (i < text.size()) {
    if (static_cast<unsigned char>(text[i]) < 0x80) {
      ++i;
      continue;
    }
    const std::size_t len = valid_sequence_at(text, i);
    if (len == 0)
      return false;
    i += len;
  }
  return true;
}

std::size_t column_count(std::string_view text) noexcept
{
  std::size_t columns = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::size_t len = valid_sequence_at(text, i);
    i += len == 0 ? 1 : len;
    ++columns;
  }
  return columns;
}

std::size_t byte_offset(std::string_view text, std::size_t column) noexcept
{
  std::size_t i = 0;
  while (column > 0 && i < text.size()) {
    const std::size_t len = valid_sequence_at(text, i);
    i += len == 0 ? 1 : len;
    --column;
  }
  return i;
}

char32_t decode(std::string_view text, std::size_t& pos) noexcept
{
  const std::size_t len = valid_sequence_at(text, pos);
  const auto lead = static_cast<unsigned char>(text[pos]);
  switch (len) {
  case 1:
    ++pos;
    return lead;
  case 2: {
    char32_t cp = (lead & 0x1Fu) << 6 | (static_cast<unsigned char>(text[pos + 1]) & 0x3Fu);
    pos += 2;
    return cp;
  }
  case 3: {
    char32_t cp = (lead & 0x0Fu) << 12 |
                  (static_cast<unsigned char>(text[pos + 1]) & 0x3Fu) << 6 |
                  (static_cast<unsigned char>(text[pos + 2]) & 0x3Fu);
    pos += 3;
    return cp;
  }
  case 4: {
    char32_t cp = (lead & 0x07u) << 18 |
                  (static_cast<unsigned char>(text[pos + 1]) & 0x3Fu) << 12 |
                  (static_cast<unsigned char>(text[pos + 2]) & 0x3Fu) << 6 |
                  (static_cast<unsigned char>(text[pos + 3]) & 0x3Fu);
    pos += 4;
    return cp;
  }
  default:
    ++pos;
    return U'\uFFFD';
  }
}

} // namespace utf8

SourceText::SourceText(std::string text) : text_(std::move(text))
{
  std::size_t start = 0;
  const std::size_t n = text_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const char c = text_[i];
    if (c != '\n' && c != '\r')
      continue;
    line_starts_.push_back(start);
    line_ends_.push_back(i);
    if (c == '\r' && i + 1 < n && text_[i + 1] == '\n')
      ++i;
    start = i + 1;
  }
  // A final line exists unless the text is empty or ends with a terminator.
  if (start < n || line_starts_.empty()) {
    line_starts_.push_back(start);
    line_ends_.push_back(n);
  }
}

std::string_view SourceText::line(std::size_t index) const
{
  const std::size_t b = line_starts_.at(index);
  return std::string_view(text_).substr(b, line_ends_[index] - b);
}

std::size_t SourceText::line_of(std::size_t offset) const
{
  auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
  if (it == line_starts_.begin())
    return 0;
  return static_cast<std::size_t>(it - line_starts_.begin()) - 1;
}

SourceLocation SourceText::location_of(std::size_t offset) const
{
  const std::size_t line_index = line_of(offset);
  const std::size_t b = line_starts_[line_index];
  const std::size_t e = std::min(offset, line_ends_[line_index]);
  SourceLocation loc{line_index, utf8::column_count(std::string_view(text_).substr(b, e - b))};
  // Terminator bytes sit one column past the content.
  if (offset > line_ends_[line_index])
    loc.column += offset - line_ends_[line_index];
  return loc;
}

std::size_t SourceText::offset_of(SourceLocation loc) const
{
  if (loc.line >= line_starts_.size())
    throw std::out_of_range("line out of range");
  const std::string_view content = line(loc.line);
  const std::size_t b = line_starts_[loc.line];
  const std::size_t within = utf8::byte_offset(content, loc.column);
  if (within < content.size())
    return b + within;
  const std::size_t past = loc.column - utf8::column_count(content);
  return std::min(b + content.size() + past, text_.size());
}

std::size_t SourceText::next_offset(std::size_t offset) const noexcept
{
  if (offset >= text_.size())
    return text_.size();
  const std::size_t len = utf8::valid_sequence_at(text_, offset);
  return offset + (len == 0 ? 1 : len);
}

std::string_view SourceText::slice(SourceLocation first, SourceLocation last) const
{
  const std::size_t b = offset_of(first);
  const std::size_t e = next_offset(offset_of(last));
  if (e < b)
    throw std::out_of_range("inverted slice");
  return std::string_view(text_).substr(b, e - b);
}

} // namespace jlam
