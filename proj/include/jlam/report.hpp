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

// Text, JSON and CSV renderings of detection results, corpus statistics,
// line classifications and generated documentation.
//
// Output is byte-stable: object keys are emitted in a fixed sorted order,
// histograms in ascending key order, and fractions with six decimals.
// Locations are 0-based in JSON and CSV and 1-based in text output.

#ifndef JLAM_REPORT_HPP
#define JLAM_REPORT_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "jlam/corpus.hpp"
#include "jlam/detect.hpp"
#include "jlam/docgen.hpp"

namespace jlam {

enum class Format { Text, Json, Csv };

std::optional<Format> parse_format(std::string_view name) noexcept;
std::string_view to_string(Format format) noexcept;

/// The corpus report. `records` are appended as a "lambdas" array in JSON
/// and ignored otherwise; text output is the one-line summary.
std::string render_stats(const CorpusStats& stats, std::span<const LambdaRecord> records, Format format);

/// "total=<n> unique=<m>"
std::string summary_line(const CorpusStats& stats);

std::string render_records(std::span<const LambdaRecord> records, std::span<const Diagnostic> diagnostics,
                           Format format);

std::string render_lines(std::span<const LineClassification> lines, Format format);

std::string render_doc(const DocSentence& doc, Format format);

/// Writes `content` to `path`. Throws Error(Io) naming the path.
void write_file(const std::filesystem::path& path, std::string_view content);

void write_report(const CorpusStats& stats, std::span<const LambdaRecord> records, Format format,
                  const std::filesystem::path& path);

} // namespace jlam

#endif // JLAM_REPORT_HPP
