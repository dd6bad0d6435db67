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

#include "jlam/error.hpp"

namespace jlam {

std::string_view to_string(ErrorCode code) noexcept
{
  switch (code) {
  case ErrorCode::NoArrow: return "NoArrow";
  case ErrorCode::MalformedHead: return "MalformedHead";
  case ErrorCode::UnbalancedDelimiters: return "UnbalancedDelimiters";
  case ErrorCode::MissingBody: return "MissingBody";
  case ErrorCode::MultiStatementBody: return "MultiStatementBody";
  case ErrorCode::NestedLambdaBody: return "NestedLambdaBody";
  case ErrorCode::EmptyBody: return "EmptyBody";
  case ErrorCode::UnsupportedStatement: return "UnsupportedStatement";
  case ErrorCode::MalformedPatch: return "MalformedPatch";
  case ErrorCode::InvalidLexicon: return "InvalidLexicon";
  case ErrorCode::Io: return "Io";
  case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_unsupported(ErrorCode code) noexcept
{
  switch (code) {
  case ErrorCode::MultiStatementBody:
  case ErrorCode::NestedLambdaBody:
  case ErrorCode::EmptyBody:
  case ErrorCode::UnsupportedStatement:
    return true;
  default:
    return false;
  }
}

Error::Error(ErrorCode code, const std::string& message, std::optional<SourceLocation> where)
  : std::runtime_error(std::string(to_string(code)) + ": " + message),
    code_(code),
    detail_(message),
    where_(where)
{
}

} // namespace jlam
