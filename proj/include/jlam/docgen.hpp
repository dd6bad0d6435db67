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

// Template-based English documentation for single-statement lambdas.
//
// A sentence is assembled from three parts:
//
//   "This lambda expression" + <parameter clause> + "and returns" + <body>
//
// The body is verbalized token by token. Operators become words, method
// calls become "the result of the execution of ... method" phrases with
// their receiver and arguments, and identifiers that name methods or arrays
// are split at camel-case boundaries. Quoted phrases use ``...'' marks.

#ifndef JLAM_DOCGEN_HPP
#define JLAM_DOCGEN_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jlam/detect.hpp"

namespace jlam {

/// Method name -> phrase substitutions, consulted before camel-case splitting.
/// Immutable once built.
class Lexicon {
public:
  /// The built-in entries (compare -> "compared to").
  static Lexicon builtin();

  /// Built-in entries overridden by a file of `name<TAB>phrase` lines.
  /// Empty lines are ignored. Throws Error(InvalidLexicon) with the line
  /// number on a malformed line, Error(Io) if the file cannot be read.
  static Lexicon load(const std::filesystem::path& path);
  static Lexicon parse(std::string_view content, const Lexicon& base);

  const std::string* find(std::string_view name) const;
  std::size_t size() const noexcept { return entries_.size(); }

private:
  std::map<std::string, std::string, std::less<>> entries_;
};

struct ArgRendering {
  enum class Kind { StringLiteral, Identifier, QualifiedName, ArrayAccess, Other };
  Kind kind = Kind::Other;
  std::string rendered;
};

struct BodyCall {
  enum class Receiver { None, SelfParameter, Named, Expression };
  Receiver receiver_kind = Receiver::None;
  std::string receiver; // dotted name, or the rendered receiver expression
  std::string method_name;
  std::vector<ArgRendering> arguments;
};

struct LexiconHit {
  std::string method_name;
  std::string phrase;

  friend bool operator==(const LexiconHit&, const LexiconHit&) = default;
};

struct DocSentence {
  std::string text;
  std::string param_clause;
  std::string return_clause;
  std::vector<LexiconHit> lexicon_hits;
  std::vector<std::string> unknown_operators; // rendered verbatim
  std::size_t param_count = 0;
};

/// Documents the first lambda in `expression`. Surrounding code (a call the
/// lambda is an argument of, a `return`) is allowed and ignored.
///
/// Throws Error with NoArrow, MalformedHead, UnbalancedDelimiters or
/// MissingBody for input that holds no lambda, and with one of the
/// is_unsupported() codes for a lambda whose body is not a single statement.
DocSentence generate_doc(std::string_view expression, const Lexicon& lexicon = Lexicon::builtin());

std::string render_param_clause(std::span<const Parameter> parameters);

/// The first method call in `body`, or nothing for operator-only bodies. A
/// receiver equal to the sole element of `parameters` is SelfParameter. A
/// dot followed by a digit is a decimal point, not a call.
std::optional<BodyCall> detect_method_call(std::string_view body,
                                           std::span<const Parameter> parameters = {},
                                           const Lexicon& lexicon = Lexicon::builtin());

std::string camel_case_split(std::string_view identifier);

/// The word for an operator, or nothing when the operator is not in the
/// lexicon (callers then render it verbatim).
std::optional<std::string_view> operator_to_word(std::string_view op) noexcept;

std::string verbalize_method_name(std::string_view name, const Lexicon& lexicon = Lexicon::builtin());

} // namespace jlam

#endif // JLAM_DOCGEN_HPP
