// Copyright 2026 The pdeglab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "pdeglab/boolean_function.hpp"

namespace pdeglab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Semantic version of the report layout, embedded as "schema".
std::string report_schema_version();

/// Runs one command line (args exclude the program name). The report goes
/// to `out` (JSON, or a table with --table) and to --out when given.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses a report and rejects a missing or different schema version.
nlohmann::json load_report(const std::string& text);

/// The report without fields that legitimately differ between runs.
nlohmann::json strip_volatile(nlohmann::json report);

/// Named function (`XOR:8`, `ADDR:2`, ...) or a truth-table file.
BooleanFunction load_function(const std::string& spec);

/// `all:<m>` or a file with one bit string per line (character i = bit i).
std::vector<std::uint64_t> load_points(const std::string& spec, std::size_t& m);

/// Plain-text rendering of a report.
std::string render_table(const nlohmann::json& report);

}  // namespace pdeglab::cli
