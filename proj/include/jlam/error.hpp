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

#ifndef JLAM_ERROR_HPP
#define JLAM_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jlam/source.hpp"

namespace jlam {

enum class ErrorCode {
  NoArrow,
  MalformedHead,
  UnbalancedDelimiters,
  MissingBody,
  // The next four are "unsupported input" for the documentation generator.
  MultiStatementBody,
  NestedLambdaBody,
  EmptyBody,
  UnsupportedStatement,
  MalformedPatch,
  InvalidLexicon,
  Io,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for the error codes the documentation generator reports when the
/// input is a well-formed lambda that it does not verbalize.
bool is_unsupported(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message,
        std::optional<SourceLocation> where = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix that what() carries.
  const std::string& detail() const noexcept { return detail_; }
  const std::optional<SourceLocation>& where() const noexcept { return where_; }

private:
  ErrorCode code_;
  std::string detail_;
  std::optional<SourceLocation> where_;
};

} // namespace jlam

#endif // JLAM_ERROR_HPP
