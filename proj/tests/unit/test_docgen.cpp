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

#include <doctest.h>

#include "jlam/docgen.hpp"
#include "test_support.hpp"

using jlam::ErrorCode;

namespace {

ErrorCode doc_error(std::string_view expr)
{
  try {
    jlam::generate_doc(expr);
  } catch (const jlam::Error& e) {
    return e.code();
  }
  FAIL("no error for " << expr);
  return ErrorCode::InvalidArgument;
}

std::string doc(std::string_view expr)
{
  return jlam::generate_doc(expr).text;
}

} // namespace

TEST_CASE("golden documentation golden rows")
{
  const auto rows = testing::golden_docs();
  REQUIRE(rows.size() == 5);
  for (const auto& row : rows) {
    CAPTURE(row.expression);
    CHECK(testing::doc_tokens(doc(row.expression)) == testing::doc_tokens(row.documentation));
  }
}

TEST_CASE("golden row 4 is reproduced exactly")
{
  CHECK(doc(".beforeResolved(ExecutableComponent.class, ec -> ec.set(\"c\"))") ==
        "This lambda expression takes 1 parameter ec and returns the result of the execution of the ``set'' "
        "method on it with parameter ``c''.");
}

TEST_CASE("parameter clause")
{
  using P = jlam::Parameter;
  CHECK(jlam::render_param_clause(std::vector<P>{}) == "does not take any parameter");
  CHECK(jlam::render_param_clause(std::vector<P>{{"x", std::nullopt}}) == "takes 1 parameter x");
  CHECK(jlam::render_param_clause(std::vector<P>{{"a", "int"}, {"b", std::nullopt}}) ==
        "takes 2 parameters int a and b");
  CHECK(jlam::render_param_clause(std::vector<P>{{"a", std::nullopt}, {"b", std::nullopt}, {"c", std::nullopt}}) ==
        "takes 3 parameters a, b and c");
}

TEST_CASE("operators become words")
{
  CHECK(doc("(a, b) -> a + b") == "This lambda expression takes 2 parameters a and b and returns a plus b.");
  CHECK(doc("(a, b) -> a - b * c / d") ==
        "This lambda expression takes 2 parameters a and b and returns a minus b times c divided by d.");
  CHECK(doc("x -> x > 1 && x < 9 || x == 0") ==
        "This lambda expression takes 1 parameter x and returns x greater than 1 and x less than 9 or x equals 0.");
  CHECK(doc("x -> x != y") == "This lambda expression takes 1 parameter x and returns x not equal y.");
  CHECK(doc("x -> y = x") == "This lambda expression takes 1 parameter x and returns y equal x.");
}

TEST_CASE("operator lexicon")
{
  CHECK(jlam::operator_to_word("+") == "plus");
  CHECK(jlam::operator_to_word("==") == "equals");
  CHECK(jlam::operator_to_word("&&") == "and");
  CHECK_FALSE(jlam::operator_to_word("%").has_value());
  CHECK_FALSE(jlam::operator_to_word(">=").has_value());
}

TEST_CASE("unknown operators are kept verbatim")
{
  const auto d = jlam::generate_doc("x -> x % 2");
  CHECK(d.text == "This lambda expression takes 1 parameter x and returns x % 2.");
  CHECK(d.unknown_operators == std::vector<std::string>{"%"});
}

TEST_CASE("camel case split")
{
  CHECK(jlam::camel_case_split("createNode") == "create Node");
  CHECK(jlam::camel_case_split("splitEvaluation") == "split Evaluation");
  CHECK(jlam::camel_case_split("getHTTPResponse") == "get HTTP Response");
  CHECK(jlam::camel_case_split("size") == "size");
  CHECK(jlam::camel_case_split("URL") == "URL");
  CHECK(jlam::camel_case_split("repo2Node") == "repo2Node");
}

TEST_CASE("method lexicon")
{
  CHECK(jlam::verbalize_method_name("compare") == "compared to");
  CHECK(jlam::verbalize_method_name("compareTo") == "compare To");
  const auto lex = jlam::Lexicon::parse("equals\tis equal to\n\nsize\tnumber of elements\n", jlam::Lexicon::builtin());
  CHECK(lex.size() == 3);
  CHECK(jlam::verbalize_method_name("equals", lex) == "is equal to");
  CHECK(jlam::verbalize_method_name("compare", lex) == "compared to");
  const auto d = jlam::generate_doc("b -> b.size()", lex);
  CHECK(d.text == "This lambda expression takes 1 parameter b and returns the result of the execution of the "
                  "``number of elements'' method on it.");
  REQUIRE(d.lexicon_hits.size() == 1);
  CHECK(d.lexicon_hits[0] == jlam::LexiconHit{"size", "number of elements"});
}

TEST_CASE("malformed lexicon lines report their line number")
{
  try {
    jlam::Lexicon::parse("ok\tfine\nbroken line\n", jlam::Lexicon::builtin());
    FAIL("expected an error");
  } catch (const jlam::Error& e) {
    CHECK(e.code() == ErrorCode::InvalidLexicon);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("method call detection")
{
  using R = jlam::BodyCall::Receiver;
  const std::vector<jlam::Parameter> ec{{"ec", std::nullopt}};
  auto call = jlam::detect_method_call("ec.set(\"c\")", ec);
  REQUIRE(call);
  CHECK(call->receiver_kind == R::SelfParameter);
  CHECK(call->method_name == "set");
  REQUIRE(call->arguments.size() == 1);
  CHECK(call->arguments[0].kind == jlam::ArgRendering::Kind::StringLiteral);

  call = jlam::detect_method_call("Double.compare(a[t], b)");
  REQUIRE(call);
  CHECK(call->receiver_kind == R::Named);
  CHECK(call->receiver == "Double");
  CHECK(call->arguments.size() == 2);
  CHECK(call->arguments[0].kind == jlam::ArgRendering::Kind::ArrayAccess);

  call = jlam::detect_method_call("createNode(NodePath.ROOT)");
  REQUIRE(call);
  CHECK(call->receiver_kind == R::None);
  CHECK(call->arguments.at(0).kind == jlam::ArgRendering::Kind::QualifiedName);

  CHECK_FALSE(jlam::detect_method_call("x + 1.5").has_value());
  CHECK_FALSE(jlam::detect_method_call("a.b").has_value());
}

TEST_CASE("argument phrasing")
{
  CHECK(doc("() -> f(a, b, c)") == "This lambda expression does not take any parameter and returns the result of the "
                                   "execution of the ``f'' method with 3 parameters a, b, and c.");
  CHECK(doc("() -> f()") ==
        "This lambda expression does not take any parameter and returns the result of the execution of the ``f'' "
        "method.");
}

TEST_CASE("chained receivers")
{
  CHECK(doc("s -> s.trim().length()") ==
        "This lambda expression takes 1 parameter s and returns the result of the execution of the ``length'' "
        "method on the result of the execution of the ``trim'' method on it.");
}

TEST_CASE("object creation")
{
  CHECK(doc("user -> new ResponseEntity<>(user, HttpStatus.OK)") ==
        "This lambda expression takes 1 parameter user and returns a new ``ResponseEntity'' object with two "
        "parameters user and HttpStatus OK.");
}

TEST_CASE("surrounding code and return are ignored")
{
  CHECK(doc("return x -> x;") == doc("x -> x"));
  CHECK(doc("f(1, x -> { return x; });") == doc("x -> x"));
}

TEST_CASE("input errors")
{
  CHECK(doc_error("x y z") == ErrorCode::NoArrow);
  CHECK(doc_error("\"a -> b\"") == ErrorCode::NoArrow);
  CHECK(doc_error("1 -> 2") == ErrorCode::MalformedHead);
  CHECK(doc_error("x ->") == ErrorCode::MissingBody);
  CHECK(doc_error("x -> f(") == ErrorCode::UnbalancedDelimiters);
}

TEST_CASE("unsupported bodies")
{
  CHECK(doc_error("(x) -> { a(); b(); }") == ErrorCode::MultiStatementBody);
  CHECK(doc_error("x -> {}") == ErrorCode::EmptyBody);
  CHECK(doc_error("x -> y -> x + y") == ErrorCode::NestedLambdaBody);
  CHECK(doc_error("x -> { if (x) go(); }") == ErrorCode::UnsupportedStatement);
  CHECK(doc_error("x -> { throw new E(); }") == ErrorCode::UnsupportedStatement);
  for (auto c : {ErrorCode::MultiStatementBody, ErrorCode::EmptyBody, ErrorCode::NestedLambdaBody,
                 ErrorCode::UnsupportedStatement})
    CHECK(jlam::is_unsupported(c));
  CHECK_FALSE(jlam::is_unsupported(ErrorCode::NoArrow));
}

TEST_CASE("generation is deterministic")
{
  for (const auto& row : testing::golden_docs())
    CHECK(doc(row.expression) == doc(row.expression));
}
