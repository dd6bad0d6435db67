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

#include "jlam/detect.hpp"

#include <algorithm>

namespace jlam {

std::string_view to_string(Typing typing) noexcept
{
  return typing == Typing::Explicit ? "Explicit" : "Implicit";
}

std::string_view to_string(BodyKind kind) noexcept
{
  return kind == BodyKind::MultiLine ? "MultiLine" : "SingleLine";
}

std::string_view to_string(CommentPlacement placement) noexcept
{
  return placement == CommentPlacement::Above ? "Above" : "Within";
}

bool LambdaExpression::has_above_comment() const noexcept
{
  return std::any_of(comments.begin(), comments.end(),
                     [](const LambdaComment& c) { return c.placement == CommentPlacement::Above; });
}

bool LambdaExpression::has_within_comment() const noexcept
{
  return std::any_of(comments.begin(), comments.end(),
                     [](const LambdaComment& c) { return c.placement == CommentPlacement::Within; });
}

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

bool is_open(char c) { return c == '(' || c == '[' || c == '{'; }
bool is_close(char c) { return c == ')' || c == ']' || c == '}'; }

// Start offset of the parameter list that ends just before the arrow.
std::size_t find_head_begin(const LexedSource& src, std::size_t arrow)
{
  const std::string_view text = src.text();
  std::size_t i = arrow;
  while (i > 0 && !src.is_significant(i - 1))
    --i;
  if (i == 0)
    throw Error(ErrorCode::MalformedHead, "nothing before the arrow",
                src.source().location_of(arrow));

  const std::size_t last = i - 1;
  const char c = text[last];
  if (c == ')' && src.class_at(last) == Lexeme::Code) {
    int depth = 0;
    for (std::size_t k = last + 1; k-- > 0;) {
      if (src.class_at(k) != Lexeme::Code)
        continue;
      if (text[k] == ')')
        ++depth;
      else if (text[k] == '(' && --depth == 0)
        return k;
    }
    throw Error(ErrorCode::MalformedHead, "unmatched ')' before the arrow",
                src.source().location_of(last));
  }
  if (is_identifier_part(c) && src.class_at(last) == Lexeme::Code) {
    std::size_t k = last;
    while (k > 0 && src.class_at(k - 1) == Lexeme::Code && is_identifier_part(text[k - 1]))
      --k;
    return k;
  }
  throw Error(ErrorCode::MalformedHead, "no parameter list before the arrow",
              src.source().location_of(last));
}

struct BodyExtent {
  std::size_t begin = 0;
  std::size_t last = 0; // inclusive
};

// `{ ... }` body: ends at the matching brace.
BodyExtent block_body(const LexedSource& src, std::size_t open)
{
  const std::string_view text = src.text();
  int depth = 0;
  for (std::size_t k = open; k < text.size(); ++k) {
    if (src.class_at(k) != Lexeme::Code)
      continue;
    if (text[k] == '{')
      ++depth;
    else if (text[k] == '}' && --depth == 0)
      return {open, k};
  }
  throw Error(ErrorCode::UnbalancedDelimiters, "unclosed '{' in lambda body",
              src.source().location_of(open));
}

// Expression body: ends before the first closing bracket that was not opened
// inside the body, or before a `;` or `,` at the body's own level. Commas
// inside a generic argument list (`new HashMap<K, V>()`) do not end it.
// An expression continues across a line break unless the previous line
// ends with a complete operand and the next line starts a new one.
bool ends_operand(std::string_view text, std::size_t last)
{
  const char c = text[last];
  if (c == ')' || c == ']' || c == '"' || c == '\'')
    return true;
  if (!is_identifier_part(c))
    return false;
  std::size_t b = last + 1;
  while (b > 0 && is_identifier_part(text[b - 1]))
    --b;
  const std::string_view word = text.substr(b, last + 1 - b);
  return word != "new" && word != "instanceof" && word != "return" && word != "throw";
}

bool starts_operand(std::string_view text, std::size_t k)
{
  const char c = text[k];
  if (c == '(' || c == '"' || c == '\'' || c == '@')
    return true;
  if (!is_identifier_start(c) && !(c >= '0' && c <= '9'))
    return false;
  return !text.substr(k).starts_with("instanceof");
}

BodyExtent expression_body(const LexedSource& src, std::size_t begin)
{
  const std::string_view text = src.text();
  std::vector<std::size_t> open; // offsets of open brackets
  int angle = 0;
  std::size_t last = npos;
  bool line_break = false;
  std::size_t k = begin;
  for (; k < text.size(); ++k) {
    const Lexeme cls = src.class_at(k);
    const char c = text[k];
    if ((cls == Lexeme::Code || is_comment(cls)) && (c == '\n' || c == '\r')) {
      line_break = true;
      continue;
    }
    if (is_comment(cls) || (cls == Lexeme::Code && is_java_whitespace(c)))
      continue;
    if (line_break && open.empty() && angle == 0 && last != npos && ends_operand(text, last) &&
        starts_operand(text, k))
      break;
    line_break = false;
    if (cls != Lexeme::Code) {
      last = k;
      continue;
    }
    if (is_open(c)) {
      open.push_back(k);
    } else if (is_close(c)) {
      if (open.empty())
        break;
      open.pop_back();
    } else if (open.empty()) {
      if (c == ';')
        break;
      if (c == ',' && angle == 0)
        break;
      if (c == '<' && k > 0 && is_identifier_part(text[k - 1])) {
        std::size_t n = k + 1;
        while (n < text.size() && is_java_whitespace(text[n]))
          ++n;
        if (n < text.size() && ((text[n] >= 'A' && text[n] <= 'Z') || text[n] == '?' || text[n] == '>'))
          ++angle;
      } else if (c == '>' && angle > 0 && text[k - 1] != '-') {
        --angle;
      }
    }
    last = k;
  }
  if (!open.empty())
    throw Error(ErrorCode::UnbalancedDelimiters,
                std::string("unclosed '") + text[open.back()] + "' in lambda body",
                src.source().location_of(open.back()));
  if (last == npos)
    throw Error(ErrorCode::MissingBody, "no body after the arrow", src.source().location_of(begin));
  return {begin, last};
}

} // namespace

LambdaExpression extract_lambda(const LexedSource& src, const ArrowHit& hit)
{
  const SourceText& source = src.source();
  const std::size_t arrow = src.offset_of(hit);
  const std::size_t head_begin = find_head_begin(src, arrow);

  std::size_t body_begin = arrow + 2;
  while (body_begin < src.text().size() && !src.is_significant(body_begin))
    ++body_begin;
  if (body_begin >= src.text().size())
    throw Error(ErrorCode::MissingBody, "no body after the arrow", hit.location);

  const BodyExtent body = src.text()[body_begin] == '{' && src.class_at(body_begin) == Lexeme::Code
                            ? block_body(src, body_begin)
                            : expression_body(src, body_begin);
  if (body.last < body_begin)
    throw Error(ErrorCode::MissingBody, "no body after the arrow", hit.location);

  LambdaExpression out;
  out.begin_offset = head_begin;
  out.end_offset = source.next_offset(body.last);
  out.arrow_offset = arrow;
  out.start = source.location_of(head_begin);
  out.end = source.location_of(body.last);
  out.arrow = hit.location;
  out.raw_text = std::string(src.text().substr(out.begin_offset, out.end_offset - out.begin_offset));
  out.line_count = out.end.line - out.start.line + 1;
  out.body_kind = out.line_count > 1 ? BodyKind::MultiLine : BodyKind::SingleLine;
  out.parameters = parse_parameters(src.text().substr(head_begin, arrow - head_begin));
  out.param_count = out.parameters.size();
  out.typing = classify_typing(out.parameters);
  return out;
}

Detection detect_lambdas(const LexedSource& src)
{
  Detection out;
  const std::vector<SourceComment> comments = collect_comments(src);
  // Indices into out.lambdas of reported lambdas that may still enclose
  // later arrows, outermost first.
  std::vector<std::size_t> enclosing;

  for (const ArrowHit& hit : src.hits()) {
    if (!hit.is_candidate())
      continue;
    const std::size_t arrow = src.offset_of(hit);
    while (!enclosing.empty() && out.lambdas[enclosing.back()].end_offset <= arrow)
      enclosing.pop_back();

    const bool folded = std::any_of(enclosing.begin(), enclosing.end(), [&](std::size_t idx) {
      return out.lambdas[idx].arrow.line == hit.location.line;
    });
    if (folded)
      continue;

    try {
      LambdaExpression lambda = extract_lambda(src, hit);
      lambda.nesting_depth = enclosing.size();
      lambda.comments = associate_comments(src, comments, lambda);
      out.lambdas.push_back(std::move(lambda));
      enclosing.push_back(out.lambdas.size() - 1);
    } catch (const Error& e) {
      out.diagnostics.push_back(Diagnostic{e.where().value_or(hit.location), e.code(), e.detail()});
    }
  }
  return out;
}

Detection detect_lambdas(std::string text)
{
  return detect_lambdas(LexedSource(std::move(text)));
}

} // namespace jlam
