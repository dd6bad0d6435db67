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
#include <array>

#include "jlam/detect.hpp"

namespace jlam {
namespace {

// Reserved words that can never name a lambda parameter.
constexpr std::array<std::string_view, 51> kKeywords = {
  "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char",
  "class", "const", "continue", "default", "do", "double", "else", "enum",
  "extends", "final", "finally", "float", "for", "goto", "if", "implements",
  "import", "instanceof", "int", "interface", "long", "native", "new",
  "package", "private", "protected", "public", "return", "short", "static",
  "strictfp", "super", "switch", "synchronized", "this", "throw", "throws",
  "transient", "try", "void", "volatile", "while", "null",
};

[[noreturn]] void malformed(std::string_view head, std::string_view why)
{
  throw Error(ErrorCode::MalformedHead, std::string(why) + " in '" + std::string(head) + "'");
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && is_java_whitespace(s.front()))
    s.remove_prefix(1);
  while (!s.empty() && is_java_whitespace(s.back()))
    s.remove_suffix(1);
  return s;
}

bool is_identifier(std::string_view s)
{
  if (s.empty() || !is_identifier_start(s.front()))
    return false;
  if (!std::all_of(s.begin(), s.end(), is_identifier_part))
    return false;
  return std::find(kKeywords.begin(), kKeywords.end(), s) == kKeywords.end();
}

// Comments are replaced by a single space; string and char literals (which
// may appear in annotation arguments) are copied through untouched.
std::string strip_comments(std::string_view s)
{
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == '/' && i + 1 < s.size() && s[i + 1] == '/') {
      while (i < s.size() && s[i] != '\n' && s[i] != '\r')
        ++i;
      out += ' ';
    } else if (c == '/' && i + 1 < s.size() && s[i + 1] == '*') {
      const auto close = s.find("*/", i + 2);
      i = close == std::string_view::npos ? s.size() : close + 2;
      out += ' ';
    } else if (c == '"' || c == '\'') {
      out += c;
      ++i;
      while (i < s.size() && s[i] != c) {
        if (s[i] == '\\' && i + 1 < s.size())
          out += s[i++];
        out += s[i++];
      }
      if (i < s.size())
        out += s[i++];
    } else {
      out += c;
      ++i;
    }
  }
  return out;
}

// Splits at commas outside (), [], <> and literals.
std::vector<std::string_view> split_top_level(std::string_view s)
{
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '"' || c == '\'') {
      for (++i; i < s.size() && s[i] != c; ++i)
        if (s[i] == '\\')
          ++i;
      continue;
    }
    if (c == '(' || c == '[' || c == '<')
      ++depth;
    else if (c == ')' || c == ']' || c == '>')
      --depth;
    else if (c == ',' && depth == 0) {
      parts.push_back(s.substr(begin, i - begin));
      begin = i + 1;
    }
  }
  parts.push_back(s.substr(begin));
  return parts;
}

// Drops leading annotations and `final`.
std::string_view strip_modifiers(std::string_view p, std::string_view head)
{
  for (;;) {
    p = trim(p);
    if (p.starts_with('@')) {
      std::size_t i = 1;
      while (i < p.size() && (is_identifier_part(p[i]) || p[i] == '.'))
        ++i;
      if (i == 1)
        malformed(head, "empty annotation");
      std::size_t j = i;
      while (j < p.size() && is_java_whitespace(p[j]))
        ++j;
      if (j < p.size() && p[j] == '(') {
        int depth = 0;
        for (; j < p.size(); ++j) {
          if (p[j] == '(')
            ++depth;
          else if (p[j] == ')' && --depth == 0)
            break;
        }
        if (j == p.size())
          malformed(head, "unclosed annotation arguments");
        i = j + 1;
      }
      p.remove_prefix(i);
      continue;
    }
    if (p.starts_with("final") && (p.size() == 5 || !is_identifier_part(p[5]))) {
      p.remove_prefix(5);
      continue;
    }
    return p;
  }
}

bool is_type_text(std::string_view t)
{
  return std::all_of(t.begin(), t.end(), [](char c) {
    return is_identifier_part(c) || is_java_whitespace(c) || c == '.' || c == '<' || c == '>' ||
           c == ',' || c == '?' || c == '[' || c == ']' || c == '&' || c == '@';
  });
}

// Removes whitespace from a type. Inside type arguments a space between two
// words survives as one space (`? extends T`); at the top level two words in
// a row are not a type.
std::string normalize_type(std::string_view type, std::string_view head)
{
  auto wordish = [](char c) { return is_identifier_part(c) || c == '?'; };
  std::string out;
  int depth = 0;
  bool pending_space = false;
  for (const char c : type) {
    if (is_java_whitespace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space && wordish(out.back()) && wordish(c)) {
      if (depth == 0)
        malformed(head, "invalid parameter type");
      out += ' ';
    }
    pending_space = false;
    if (c == '<')
      ++depth;
    else if (c == '>')
      --depth;
    out += c;
  }
  return out;
}

Parameter parse_one(std::string_view part, std::string_view head)
{
  std::string_view p = strip_modifiers(part, head);
  if (p.empty())
    malformed(head, "empty parameter");

  // C-style array dimensions after the name: `int x[]`.
  std::string dims;
  while (p.ends_with(']')) {
    p.remove_suffix(1);
    p = trim(p);
    if (!p.ends_with('['))
      malformed(head, "unbalanced brackets");
    p.remove_suffix(1);
    p = trim(p);
    dims += "[]";
  }

  std::size_t name_begin = p.size();
  while (name_begin > 0 && is_identifier_part(p[name_begin - 1]))
    --name_begin;
  Parameter out;
  out.name = std::string(p.substr(name_begin));
  if (!is_identifier(out.name))
    malformed(head, "invalid parameter name");

  const std::string_view type = trim(p.substr(0, name_begin));
  if (type.empty()) {
    if (!dims.empty())
      malformed(head, "array dimensions without a type");
    return out;
  }
  if (!is_type_text(type) || !is_identifier_part(type.front()))
    malformed(head, "invalid parameter type");
  out.declared_type = normalize_type(type, head) + dims;
  return out;
}

} // namespace

std::vector<Parameter> parse_parameters(std::string_view head)
{
  const std::string cleaned = strip_comments(head);
  const std::string_view h = trim(cleaned);
  if (h.empty())
    malformed(head, "empty parameter list");

  if (h.front() != '(') {
    if (!is_identifier(h))
      malformed(head, "expected an identifier");
    return {Parameter{std::string(h), std::nullopt}};
  }
  if (h.back() != ')')
    malformed(head, "unclosed parameter list");

  const std::string_view inner = trim(h.substr(1, h.size() - 2));
  if (inner.empty())
    return {};

  std::vector<Parameter> params;
  for (const std::string_view part : split_top_level(inner))
    params.push_back(parse_one(part, head));
  return params;
}

Typing classify_typing(std::span<const Parameter> parameters) noexcept
{
  const bool any_typed = std::any_of(parameters.begin(), parameters.end(),
                                     [](const Parameter& p) { return p.declared_type.has_value(); });
  return any_typed ? Typing::Explicit : Typing::Implicit;
}

} // namespace jlam
