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

// Line-oriented arrow scanner for Java text that need not compile.
//
// The scanner does not produce tokens. It classifies every byte of a line
// into a lexical class (code, comment, string, ...) and reports every "->"
// with the context it was found in. Block comments and text blocks carry
// across lines through ScanState.

#ifndef JLAM_SCAN_HPP
#define JLAM_SCAN_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jlam/source.hpp"

namespace jlam {

struct ScanState {
  bool in_block_comment = false;
  bool in_text_block = false;

  friend bool operator==(const ScanState&, const ScanState&) = default;
};

enum class ArrowContext : std::uint8_t {
  Code,
  Comment,
  String,
  CharLiteral,
  SwitchCaseArrow, // case X -> / default ->
  DecrementGt,     // i-->0
};

std::string_view to_string(ArrowContext context) noexcept;

struct ArrowHit {
  SourceLocation location; // of the '-'
  ArrowContext context = ArrowContext::Code;
  std::size_t byte_column = 0; // byte offset of the '-' within its line

  bool is_candidate() const noexcept { return context == ArrowContext::Code; }
};

/// Lexical class of a single byte.
enum class Lexeme : std::uint8_t {
  Code,
  LineComment,
  BlockComment,
  String,
  Char,
  TextBlock,
};

inline bool is_comment(Lexeme l) noexcept
{
  return l == Lexeme::LineComment || l == Lexeme::BlockComment;
}

struct LineScan {
  std::vector<ArrowHit> hits;
  ScanState state;
};

/// Scans one line (no terminator). Every "->" occurrence is reported with
/// exactly one context. A line that is not valid UTF-8 yields no hits but
/// still advances the state.
LineScan scan_line(std::string_view line, ScanState state = {}, std::size_t line_number = 0);

/// Lower-level form of scan_line: writes the class of each byte into
/// `classes` (which must hold line.size() entries) and appends hits.
ScanState lex_line(std::string_view line, ScanState state, std::size_t line_number,
                   std::span<Lexeme> classes, std::vector<ArrowHit>& hits);

/// All hits of a text, folding ScanState from a fresh state over its lines.
std::vector<ArrowHit> scan_text(std::string_view text);

/// A source text together with the lexical class of every byte and every
/// arrow hit. Line terminators take the class of the state they end in.
class LexedSource {
public:
  explicit LexedSource(std::string text);
  explicit LexedSource(SourceText source);

  const SourceText& source() const noexcept { return source_; }
  std::string_view text() const noexcept { return source_.text(); }

  std::span<const ArrowHit> hits() const noexcept { return hits_; }
  std::span<const Lexeme> classes() const noexcept { return classes_; }
  Lexeme class_at(std::size_t offset) const { return classes_.at(offset); }

  /// Byte offset of the hit's '-' in the whole text.
  std::size_t offset_of(const ArrowHit& hit) const
  {
    return source_.line_start(hit.location.line) + hit.byte_column;
  }

  /// False for comment bytes and whitespace in code.
  bool is_significant(std::size_t offset) const noexcept;

private:
  void lex();

  SourceText source_;
  std::vector<Lexeme> classes_;
  std::vector<ArrowHit> hits_;
};

bool is_java_whitespace(char c) noexcept;
bool is_identifier_start(char c) noexcept;
bool is_identifier_part(char c) noexcept;

} // namespace jlam

#endif // JLAM_SCAN_HPP
