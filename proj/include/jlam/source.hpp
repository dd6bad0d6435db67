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

#ifndef JLAM_SOURCE_HPP
#define JLAM_SOURCE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace jlam {

/// A position in a text. Both fields are 0-based; the column counts UTF-8
/// code points from the start of the line (an undecodable byte counts as one).
struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;

  friend auto operator<=>(const SourceLocation&, const SourceLocation&) = default;
};

namespace utf8 {

/// Length of the sequence introduced by `lead`, or 0 for a continuation or
/// invalid lead byte.
std::size_t sequence_length(unsigned char lead) noexcept;

/// Length of the well-formed sequence starting at `text[pos]`, or 0 when the
/// bytes there do not decode.
std::size_t valid_sequence_at(std::string_view text, std::size_t pos) noexcept;

bool is_valid(std::string_view text) noexcept;

/// Number of columns spanned by `text` (see SourceLocation).
std::size_t column_count(std::string_view text) noexcept;

/// Byte offset of `column` within `text`; `text.size()` if past the end.
std::size_t byte_offset(std::string_view text, std::size_t column) noexcept;

/// Decodes the code point at `pos` and advances it. Undecodable bytes yield
/// U+FFFD and advance by one.
char32_t decode(std::string_view text, std::size_t& pos) noexcept;

} // namespace utf8

/// An immutable text with a line index. Lines end at "\n", "\r\n" or "\r";
/// the terminators are kept in the text but excluded from line(i).
class SourceText {
public:
  SourceText() = default;
  explicit SourceText(std::string text);

  std::string_view text() const noexcept { return text_; }
  std::size_t size() const noexcept { return text_.size(); }

  std::size_t line_count() const noexcept { return line_starts_.size(); }
  std::string_view line(std::size_t index) const;
  std::size_t line_start(std::size_t index) const { return line_starts_.at(index); }
  /// Offset one past the last content byte of the line.
  std::size_t line_end(std::size_t index) const { return line_ends_.at(index); }

  /// Index of the line holding `offset`; terminator bytes belong to the line
  /// they end.
  std::size_t line_of(std::size_t offset) const;

  SourceLocation location_of(std::size_t offset) const;
  std::size_t offset_of(SourceLocation loc) const;

  /// Byte offset one past the code point at `offset`.
  std::size_t next_offset(std::size_t offset) const noexcept;

  /// Text from `first` through `last`, both inclusive.
  std::string_view slice(SourceLocation first, SourceLocation last) const;

private:
  std::string text_;
  std::vector<std::size_t> line_starts_;
  std::vector<std::size_t> line_ends_;
};

} // namespace jlam

#endif // JLAM_SOURCE_HPP
