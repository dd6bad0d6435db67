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

#include <fstream>
#include <sstream>

#include "jlam/docgen.hpp"

namespace jlam {

Lexicon Lexicon::builtin()
{
  Lexicon lex;
  lex.entries_.emplace("compare", "compared to");
  return lex;
}

Lexicon Lexicon::parse(std::string_view content, const Lexicon& base)
{
  Lexicon lex = base;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t nl = content.find('\n', pos);
    if (nl == std::string_view::npos)
      nl = content.size();
    std::string_view line = content.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line.ends_with('\r'))
      line.remove_suffix(1);
    if (line.empty())
      continue;

    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 == line.size())
      throw Error(ErrorCode::InvalidLexicon,
                  "line " + std::to_string(line_no) + ": expected 'name<TAB>phrase'");
    const std::string_view name = line.substr(0, tab);
    for (const char c : name)
      if (!is_identifier_part(c))
        throw Error(ErrorCode::InvalidLexicon,
                    "line " + std::to_string(line_no) + ": invalid method name '" + std::string(name) + "'");
    lex.entries_.insert_or_assign(std::string(name), std::string(line.substr(tab + 1)));
  }
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::Io, "cannot read lexicon '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), builtin());
}

const std::string* Lexicon::find(std::string_view name) const
{
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

} // namespace jlam
