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

#ifndef JLAM_DETECT_HPP
#define JLAM_DETECT_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jlam/error.hpp"
#include "jlam/scan.hpp"
#include "jlam/source.hpp"

namespace jlam {

enum class Typing { Explicit, Implicit };
enum class BodyKind { SingleLine, MultiLine };
enum class CommentPlacement { Above, Within };

std::string_view to_string(Typing typing) noexcept;
std::string_view to_string(BodyKind kind) noexcept;
std::string_view to_string(CommentPlacement placement) noexcept;

struct Parameter {
  std::string name;
  std::optional<std::string> declared_type;

  friend bool operator==(const Parameter&, const Parameter&) = default;
};

struct LambdaComment {
  CommentPlacement placement = CommentPlacement::Above;
  std::string text;
  SourceLocation location;
};

/// A lambda expression found in a source text. `start` and `end` are
/// inclusive: slicing the source from start through end yields raw_text.
struct LambdaExpression {
  std::string raw_text;
  SourceLocation start;
  SourceLocation end;
  SourceLocation arrow;
  std::size_t line_count = 1;
  std::vector<Parameter> parameters;
  std::size_t param_count = 0;
  Typing typing = Typing::Implicit;
  BodyKind body_kind = BodyKind::SingleLine;
  std::size_t nesting_depth = 0;
  std::vector<LambdaComment> comments;

  // Byte offsets into the source: [begin_offset, end_offset) and the '-'.
  std::size_t begin_offset = 0;
  std::size_t end_offset = 0;
  std::size_t arrow_offset = 0;

  bool has_above_comment() const noexcept;
  bool has_within_comment() const noexcept;
};

/// A comment in a source text, as a run of comment bytes.
struct SourceComment {
  enum class Kind { Line, Block } kind = Kind::Line;
  std::size_t begin_offset = 0; // at the first '/'
  std::size_t end_offset = 0;   // one past the last comment byte
  SourceLocation start;
  SourceLocation end; // inclusive
  bool whole_line = false; // only whitespace shares its lines
  std::string text;        // delimiters and javadoc stars removed
};

/// Parses the text left of an arrow: a bare identifier, "()", or a
/// parenthesized list of optionally typed, optionally annotated parameters.
/// Throws Error(MalformedHead) otherwise.
std::vector<Parameter> parse_parameters(std::string_view head);

Typing classify_typing(std::span<const Parameter> parameters) noexcept;

/// Extent, parameters and typing of the lambda whose arrow is `hit`.
/// Comments and nesting depth are left empty. Throws Error with
/// MalformedHead, UnbalancedDelimiters or MissingBody.
LambdaExpression extract_lambda(const LexedSource& source, const ArrowHit& hit);

std::vector<SourceComment> collect_comments(const LexedSource& source);

std::vector<LambdaComment> associate_comments(const LexedSource& source,
                                              const LambdaExpression& lambda);
std::vector<LambdaComment> associate_comments(const LexedSource& source,
                                              std::span<const SourceComment> comments,
                                              const LambdaExpression& lambda);

struct Diagnostic {
  SourceLocation location;
  ErrorCode code = ErrorCode::MalformedHead;
  std::string message;
};

struct Detection {
  std::vector<LambdaExpression> lambdas; // document order
  std::vector<Diagnostic> diagnostics;   // candidate arrows that did not extract
};

/// Every lambda in the source, with comments and nesting depth filled in.
/// An arrow on the same line as the arrow of an enclosing reported lambda is
/// folded into that lambda and not reported on its own.
Detection detect_lambdas(const LexedSource& source);
Detection detect_lambdas(std::string text);

} // namespace jlam

#endif // JLAM_DETECT_HPP
