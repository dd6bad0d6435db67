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

#include "jlam/docgen.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace jlam {

namespace {

constexpr std::string_view kIntro = "This lambda expression";
constexpr std::string_view kOpenQuote = "``";
constexpr std::string_view kCloseQuote = "''";

std::string tex_quoted(std::string_view s)
{
  std::string out(kOpenQuote);
  out += s;
  out += kCloseQuote;
  return out;
}

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string join(const std::vector<std::string>& words, std::string_view sep = " ")
{
  std::string out;
  for (const auto& w : words) {
    if (w.empty())
      continue;
    if (!out.empty())
      out += sep;
    out += w;
  }
  return out;
}

// "a and b", "a, b and c"
std::string list_phrase(const std::vector<std::string>& items)
{
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0)
      out += i + 1 == items.size() ? " and " : ", ";
    out += items[i];
  }
  return out;
}

// --- tokens ---------------------------------------------------------------

struct Token {
  enum class Kind { Identifier, Number, String, Char, Operator, Punct, End };
  Kind kind = Kind::End;
  std::string text; // string literals: the content without quotes
};

// Longest first.
constexpr std::array<std::string_view, 40> kOperators = {
  ">>>=", "<<=", ">>=", ">>>", "...", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=",
  "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", "->", "::", "+", "-", "*", "/",
  "%", "=", "<", ">", "!", "~", "?", ":", "&", "|", "^", "@",
};

std::vector<Token> tokenize(std::string_view s)
{
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    const char c = s[i];
    if (is_java_whitespace(c)) {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && s[i + 1] == '/') {
      while (i < n && s[i] != '\n' && s[i] != '\r')
        ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && s[i + 1] == '*') {
      const auto close = s.find("*/", i + 2);
      i = close == std::string_view::npos ? n : close + 2;
      continue;
    }
    if (c == '"' || c == '\'') {
      const bool text_block = c == '"' && s.substr(i, 3) == R"(""")";
      const std::string_view delim = text_block ? std::string_view(R"(""")") : s.substr(i, 1);
      std::size_t j = i + delim.size();
      std::string content;
      while (j < n && s.substr(j, delim.size()) != delim) {
        if (s[j] == '\\' && j + 1 < n)
          content += s[j++];
        content += s[j++];
      }
      if (text_block) {
        // Text block content starts after the opening line.
        const auto nl = content.find_first_of("\r\n");
        if (nl != std::string::npos)
          content.erase(0, nl + 1);
      }
      out.push_back({c == '"' ? Token::Kind::String : Token::Kind::Char, std::move(content)});
      i = std::min(n, j + delim.size());
      continue;
    }
    if (is_digit(c) || (c == '.' && i + 1 < n && is_digit(s[i + 1]))) {
      std::size_t j = i + 1;
      while (j < n) {
        const char d = s[j];
        if (is_identifier_part(d) || d == '.') {
          ++j;
        } else if ((d == '+' || d == '-') && (s[j - 1] == 'e' || s[j - 1] == 'E') &&
                   !(s.substr(i, 2) == "0x" || s.substr(i, 2) == "0X")) {
          ++j;
        } else {
          break;
        }
      }
      out.push_back({Token::Kind::Number, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    if (is_identifier_start(c)) {
      std::size_t j = i + 1;
      while (j < n && is_identifier_part(s[j]))
        ++j;
      out.push_back({Token::Kind::Identifier, std::string(s.substr(i, j - i))});
      i = j;
      continue;
    }
    if (std::string_view("()[]{},.;").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::Punct, std::string(1, c)});
      ++i;
      continue;
    }
    std::string_view op = s.substr(i, 1);
    for (const std::string_view candidate : kOperators) {
      if (s.substr(i, candidate.size()) == candidate) {
        op = candidate;
        break;
      }
    }
    out.push_back({Token::Kind::Operator, std::string(op)});
    i += op.size();
  }
  out.push_back({Token::Kind::End, {}});
  return out;
}

// --- verbalizer -----------------------------------------------------------

// A rendered operand together with what it was, so arguments and receivers
// can be phrased by kind.
struct Term {
  enum class Kind { Name, StringLiteral, Literal, Call, ArrayAccess, Phrase };
  Kind kind = Kind::Phrase;
  std::vector<std::string> parts; // Name: the dotted components
  std::string text;               // everything but Name

  std::string render() const
  {
    switch (kind) {
    case Kind::Name: return join(parts);
    case Kind::StringLiteral: return tex_quoted(text);
    default: return text;
    }
  }
};

struct Expr {
  std::vector<std::string> words;
  std::vector<Term> terms; // operands, in order
  bool single_term() const { return terms.size() == 1 && words.size() == 1; }
};

class Verbalizer {
public:
  Verbalizer(std::vector<Token> tokens, std::span<const Parameter> params, const Lexicon& lexicon)
    : tokens_(std::move(tokens)), params_(params), lexicon_(lexicon)
  {
  }

  Expr expression()
  {
    Expr e;
    while (!at_stop())
      step(e);
    return e;
  }

  bool at_end() const { return peek().kind == Token::Kind::End; }
  const Token& peek(std::size_t ahead = 0) const
  {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  void skip() { ++pos_; }

  // Calls ordered by the position of the method name.
  std::vector<BodyCall> calls() const
  {
    std::vector<std::pair<std::size_t, BodyCall>> sorted = calls_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<BodyCall> out;
    for (auto& [pos, call] : sorted)
      out.push_back(call);
    return out;
  }
  const std::vector<LexiconHit>& lexicon_hits() const { return lexicon_hits_; }
  const std::vector<std::string>& unknown_operators() const { return unknown_ops_; }

private:
  bool is_punct(const Token& t, char c) const
  {
    return t.kind == Token::Kind::Punct && t.text.size() == 1 && t.text[0] == c;
  }
  bool is_op(const Token& t, std::string_view op) const
  {
    return t.kind == Token::Kind::Operator && t.text == op;
  }

  bool at_stop() const
  {
    const Token& t = peek();
    if (t.kind == Token::Kind::End)
      return true;
    return t.kind == Token::Kind::Punct && std::string_view(",)]};").find(t.text[0]) != std::string_view::npos;
  }

  void step(Expr& e)
  {
    const Token& t = peek();
    if (t.kind == Token::Kind::Operator) {
      const std::string op = t.text;
      skip();
      if (const auto word = operator_to_word(op)) {
        e.words.emplace_back(*word);
      } else {
        e.words.push_back(op);
        if (std::find(unknown_ops_.begin(), unknown_ops_.end(), op) == unknown_ops_.end())
          unknown_ops_.push_back(op);
      }
      return;
    }
    if (is_punct(t, '.')) {
      // A stray dot (e.g. after a literal we do not model); keep it verbatim.
      skip();
      e.words.emplace_back(".");
      return;
    }
    Term term = postfix(primary());
    e.words.push_back(term.render());
    e.terms.push_back(std::move(term));
  }

  Term primary()
  {
    const Token t = peek();
    skip();
    switch (t.kind) {
    case Token::Kind::String: return {Term::Kind::StringLiteral, {}, t.text};
    case Token::Kind::Char: return {Term::Kind::Literal, {}, "'" + t.text + "'"};
    case Token::Kind::Number: return {Term::Kind::Literal, {}, t.text};
    case Token::Kind::Identifier:
      if (t.text == "new")
        return creation();
      return {Term::Kind::Name, {t.text}, {}};
    case Token::Kind::Punct:
      if (t.text == "(" || t.text == "{") {
        const char close = t.text == "(" ? ')' : '}';
        Expr inner = expression();
        if (is_punct(peek(), close))
          skip();
        // Keep a lone parenthesized operand's kind: `(x)` is still x.
        if (close == ')' && inner.single_term())
          return inner.terms.front();
        std::string text = join(inner.words);
        if (close == '}')
          text = "{ " + text + " }";
        return {Term::Kind::Phrase, {}, std::move(text)};
      }
      return {Term::Kind::Phrase, {}, t.text};
    default:
      return {Term::Kind::Phrase, {}, t.text};
    }
  }

  void skip_type_arguments()
  {
    if (!is_op(peek(), "<"))
      return;
    int depth = 0;
    while (!at_end()) {
      const Token& t = peek();
      if (t.kind == Token::Kind::Operator) {
        for (const char c : t.text) {
          if (c == '<')
            ++depth;
          else if (c == '>')
            --depth;
        }
      }
      skip();
      if (depth <= 0)
        return;
    }
  }

  // `new T(args)`, `new T[n]`, `new T[]{...}`
  Term creation()
  {
    std::vector<std::string> type;
    while (peek().kind == Token::Kind::Identifier) {
      type.push_back(peek().text);
      skip();
      skip_type_arguments();
      if (is_punct(peek(), '.') && peek(1).kind == Token::Kind::Identifier)
        skip();
      else
        break;
    }
    const std::string type_name = type.empty() ? std::string() : type.back();
    if (is_punct(peek(), '(')) {
      skip();
      const std::vector<ArgRendering> args = arguments();
      return {Term::Kind::Phrase, {}, "a new " + tex_quoted(type_name) + " object" + with_arguments(args)};
    }
    while (is_punct(peek(), '[')) {
      skip();
      expression();
      if (is_punct(peek(), ']'))
        skip();
    }
    if (is_punct(peek(), '{')) {
      skip();
      expression();
      if (is_punct(peek(), '}'))
        skip();
    }
    return {Term::Kind::Phrase, {}, "a new " + tex_quoted(type_name) + " array"};
  }

  // After '(' has been consumed; consumes the closing ')'.
  std::vector<ArgRendering> arguments()
  {
    std::vector<ArgRendering> args;
    if (is_punct(peek(), ')')) {
      skip();
      return args;
    }
    for (;;) {
      Expr e = expression();
      ArgRendering a;
      a.rendered = join(e.words);
      if (e.single_term()) {
        const Term& t = e.terms.front();
        switch (t.kind) {
        case Term::Kind::StringLiteral: a.kind = ArgRendering::Kind::StringLiteral; break;
        case Term::Kind::Name:
          a.kind = t.parts.size() == 1 ? ArgRendering::Kind::Identifier : ArgRendering::Kind::QualifiedName;
          break;
        case Term::Kind::ArrayAccess: a.kind = ArgRendering::Kind::ArrayAccess; break;
        default: a.kind = ArgRendering::Kind::Other; break;
        }
      }
      args.push_back(std::move(a));
      if (is_punct(peek(), ',')) {
        skip();
        continue;
      }
      if (is_punct(peek(), ')'))
        skip();
      return args;
    }
  }

  static std::string with_arguments(const std::vector<ArgRendering>& args)
  {
    std::vector<std::string> items;
    for (const auto& a : args)
      items.push_back(a.rendered);
    switch (items.size()) {
    case 0: return {};
    case 1: return " with parameter " + items[0];
    case 2: return " with two parameters " + items[0] + " and " + items[1];
    default: {
      std::string out = " with " + std::to_string(items.size()) + " parameters ";
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0)
          out += i + 1 == items.size() ? ", and " : ", ";
        out += items[i];
      }
      return out;
    }
    }
  }

  bool is_sole_parameter(const Term& t) const
  {
    return params_.size() == 1 && t.kind == Term::Kind::Name && t.parts.size() == 1 &&
           t.parts.front() == params_.front().name;
  }

  Term call(std::optional<Term> receiver, const std::string& name, std::size_t name_pos)
  {
    const std::vector<ArgRendering> args = arguments();

    std::string verb;
    if (const std::string* phrase = lexicon_.find(name)) {
      verb = *phrase;
      lexicon_hits_.push_back({name, *phrase});
    } else {
      verb = camel_case_split(name);
    }

    BodyCall bc;
    bc.method_name = name;
    bc.arguments = args;
    std::string text = "the result of the execution of ";
    if (receiver && receiver->kind == Term::Kind::Name && receiver->parts == std::vector<std::string>{"this"})
      receiver.reset();
    if (!receiver) {
      bc.receiver_kind = BodyCall::Receiver::None;
      text += "the " + tex_quoted(verb) + " method";
    } else if (is_sole_parameter(*receiver)) {
      bc.receiver_kind = BodyCall::Receiver::SelfParameter;
      bc.receiver = receiver->parts.front();
      text += "the " + tex_quoted(verb) + " method on it";
    } else if (receiver->kind == Term::Kind::Name) {
      bc.receiver_kind = BodyCall::Receiver::Named;
      bc.receiver = join(receiver->parts, ".");
      text += join(receiver->parts) + "'s " + tex_quoted(verb) + " method";
    } else {
      bc.receiver_kind = BodyCall::Receiver::Expression;
      bc.receiver = receiver->render();
      text += "the " + tex_quoted(verb) + " method on " + receiver->render();
    }
    text += with_arguments(args);
    calls_.emplace_back(name_pos, std::move(bc));
    return {Term::Kind::Call, {}, std::move(text)};
  }

  Term postfix(Term term)
  {
    for (;;) {
      const Token& t = peek();
      if (is_punct(t, '(') && term.kind == Term::Kind::Name && term.parts.size() == 1) {
        const std::size_t name_pos = pos_ - 1;
        skip();
        term = call(std::nullopt, term.parts.front(), name_pos);
        continue;
      }
      if (is_punct(t, '.')) {
        const std::size_t save = pos_;
        skip();
        skip_type_arguments(); // `Collections.<String>emptyList()`
        if (peek().kind != Token::Kind::Identifier) {
          pos_ = save;
          return term;
        }
        const std::string name = peek().text;
        const std::size_t name_pos = pos_;
        skip();
        if (is_punct(peek(), '(')) {
          skip();
          term = call(std::move(term), name, name_pos);
        } else if (term.kind == Term::Kind::Name) {
          term.parts.push_back(name);
        } else {
          term = {Term::Kind::Phrase, {}, name + " of " + term.render()};
        }
        continue;
      }
      if (is_punct(t, '[')) {
        skip();
        const Expr index = expression();
        if (is_punct(peek(), ']'))
          skip();
        std::string base;
        if (term.kind == Term::Kind::Name) {
          std::vector<std::string> split;
          for (const auto& p : term.parts)
            split.push_back(camel_case_split(p));
          base = tex_quoted(join(split));
        } else {
          base = term.render();
        }
        term = {Term::Kind::ArrayAccess, {}, "element of " + base + " array " + join(index.words)};
        continue;
      }
      if (is_op(t, "::") && peek(1).kind != Token::Kind::End) {
        std::string text = term.render() + "::" + peek(1).text;
        pos_ += 2;
        term = {Term::Kind::Phrase, {}, std::move(text)};
        continue;
      }
      return term;
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::span<const Parameter> params_;
  const Lexicon& lexicon_;
  std::vector<std::pair<std::size_t, BodyCall>> calls_;
  std::vector<LexiconHit> lexicon_hits_;
  std::vector<std::string> unknown_ops_;
};

// --- body shape checks ----------------------------------------------------

constexpr std::array<std::string_view, 13> kStatementKeywords = {
  "if", "for", "while", "do", "try", "switch", "synchronized", "throw",
  "break", "continue", "assert", "yield", "class",
};

std::string_view trim(std::string_view s)
{
  while (!s.empty() && is_java_whitespace(s.front()))
    s.remove_prefix(1);
  while (!s.empty() && is_java_whitespace(s.back()))
    s.remove_suffix(1);
  return s;
}

std::string_view first_word(std::string_view s)
{
  std::size_t i = 0;
  while (i < s.size() && is_identifier_part(s[i]))
    ++i;
  return s.substr(0, i);
}

// Returns the single statement of the lambda body, without braces, `return`
// or the terminating semicolon.
std::string single_statement(const LexedSource& src, const LambdaExpression& lambda)
{
  const std::string_view text = src.text();
  std::size_t b = lambda.arrow_offset + 2;
  while (b < lambda.end_offset && !src.is_significant(b))
    ++b;
  const std::size_t e = lambda.end_offset;
  const SourceLocation where = src.source().location_of(b);
  const std::string_view body = text.substr(b, e - b);

  for (const ArrowHit& hit : src.hits()) {
    const std::size_t off = src.offset_of(hit);
    if (hit.is_candidate() && off > lambda.arrow_offset && off < e)
      throw Error(ErrorCode::NestedLambdaBody, "body contains another lambda: '" + std::string(body) + "'",
                  hit.location);
  }

  const bool block = text[b] == '{';
  const std::size_t inner_b = block ? b + 1 : b;
  const std::size_t inner_e = block ? e - 1 : e;
  std::size_t semicolons = 0;
  std::size_t last_semicolon = inner_e;
  for (std::size_t k = inner_b; k < inner_e; ++k) {
    if (text[k] == ';' && src.class_at(k) == Lexeme::Code) {
      ++semicolons;
      last_semicolon = k;
    }
  }

  std::string statement;
  if (block) {
    bool trailing = false;
    for (std::size_t k = last_semicolon + 1; k < inner_e && !trailing; ++k)
      trailing = src.is_significant(k);
    if (semicolons > 1 || (semicolons == 1 && trailing))
      throw Error(ErrorCode::MultiStatementBody,
                  "body has more than one statement: '" + std::string(body) + "'", where);
    std::string_view s = text.substr(inner_b, (semicolons == 1 ? last_semicolon : inner_e) - inner_b);
    // Comments only count as emptiness when nothing else is there.
    bool any = false;
    for (std::size_t k = inner_b; k < inner_e && !any; ++k)
      any = src.is_significant(k);
    if (!any)
      throw Error(ErrorCode::EmptyBody, "body is an empty block: '" + std::string(body) + "'", where);
    statement = std::string(trim(s));
  } else {
    if (semicolons > 0)
      throw Error(ErrorCode::MultiStatementBody,
                  "body contains statements: '" + std::string(body) + "'", where);
    statement = std::string(trim(body));
  }

  const std::string_view word = first_word(statement);
  if (word == "return") {
    statement = std::string(trim(std::string_view(statement).substr(6)));
  } else if (std::find(kStatementKeywords.begin(), kStatementKeywords.end(), word) != kStatementKeywords.end()) {
    throw Error(ErrorCode::UnsupportedStatement,
                "'" + std::string(word) + "' statement in body: '" + std::string(body) + "'", where);
  }
  if (statement.empty())
    throw Error(ErrorCode::EmptyBody, "body returns nothing: '" + std::string(body) + "'", where);
  return statement;
}

} // namespace

std::optional<std::string_view> operator_to_word(std::string_view op) noexcept
{
  static constexpr std::array<std::pair<std::string_view, std::string_view>, 11> kWords = {{
    {"+", "plus"},
    {"=", "equal"},
    {"-", "minus"},
    {"*", "times"},
    {"/", "divided by"},
    {">", "greater than"},
    {"<", "less than"},
    {"==", "equals"},
    {"!=", "not equal"},
    {"&&", "and"},
    {"||", "or"},
  }};
  for (const auto& [sym, word] : kWords)
    if (sym == op)
      return word;
  return std::nullopt;
}

std::string camel_case_split(std::string_view id)
{
  std::string out;
  out.reserve(id.size() + 4);
  for (std::size_t i = 0; i < id.size(); ++i) {
    const char c = id[i];
    if (i > 0 && is_upper(c)) {
      const char prev = id[i - 1];
      const bool after_lower = is_lower(prev);
      const bool acronym_end = is_upper(prev) && i + 1 < id.size() && is_lower(id[i + 1]);
      if (after_lower || acronym_end)
        out += ' ';
    }
    out += c;
  }
  return out;
}

std::string verbalize_method_name(std::string_view name, const Lexicon& lexicon)
{
  if (const std::string* phrase = lexicon.find(name))
    return *phrase;
  return camel_case_split(name);
}

std::string render_param_clause(std::span<const Parameter> parameters)
{
  std::vector<std::string> names;
  for (const Parameter& p : parameters)
    names.push_back(p.declared_type ? *p.declared_type + " " + p.name : p.name);
  switch (names.size()) {
  case 0: return "does not take any parameter";
  case 1: return "takes 1 parameter " + names[0];
  default: return "takes " + std::to_string(names.size()) + " parameters " + list_phrase(names);
  }
}

std::optional<BodyCall> detect_method_call(std::string_view body, std::span<const Parameter> parameters,
                                           const Lexicon& lexicon)
{
  Verbalizer v(tokenize(body), parameters, lexicon);
  while (!v.at_end()) {
    v.expression();
    if (!v.at_end())
      v.skip();
  }
  std::vector<BodyCall> calls = v.calls();
  if (calls.empty())
    return std::nullopt;
  return std::move(calls.front());
}

DocSentence generate_doc(std::string_view expression, const Lexicon& lexicon)
{
  const LexedSource src{std::string(expression)};
  const auto first = std::find_if(src.hits().begin(), src.hits().end(),
                                  [](const ArrowHit& h) { return h.is_candidate(); });
  if (first == src.hits().end())
    throw Error(ErrorCode::NoArrow, "no lambda arrow in '" + std::string(expression) + "'");

  const LambdaExpression lambda = extract_lambda(src, *first);
  const std::string statement = single_statement(src, lambda);

  Verbalizer v(tokenize(statement), lambda.parameters, lexicon);
  std::vector<std::string> words;
  while (!v.at_end()) {
    Expr e = v.expression();
    words.insert(words.end(), e.words.begin(), e.words.end());
    if (!v.at_end()) {
      // A closing bracket with no opener; keep it so nothing is dropped.
      words.push_back(v.peek().text);
      v.skip();
    }
  }

  DocSentence doc;
  doc.param_count = lambda.param_count;
  doc.param_clause = render_param_clause(lambda.parameters);
  doc.return_clause = join(words);
  doc.lexicon_hits = v.lexicon_hits();
  doc.unknown_operators = v.unknown_operators();
  doc.text = std::string(kIntro) + " " + doc.param_clause + " and returns " + doc.return_clause + ".";
  return doc;
}

} // namespace jlam
