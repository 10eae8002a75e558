// Copyright 2026 The r2c Authors
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

#include <array>
#include <filesystem>
#include <ostream>
#include <string_view>

#include "r2c/eval/harness.hpp"

namespace r2c::eval {

// Column order of the per-record TSV file.
inline constexpr std::array<std::string_view, 10> kReportColumns = {
    "id",          "task",         "original_tokens", "compressed_tokens",
    "rejoined_tokens", "token_ratio", "latency_ms",     "scoring_ms",
    "metric",      "error"};

void write_rows_tsv(std::ostream& out, const EvalReport& report);
void write_summary_json(std::ostream& out, const EvalReport& report);

// Writes <prefix>.tsv and <prefix>.summary.json.
void write_report_files(const std::filesystem::path& prefix,
                        const EvalReport& report);

}  // namespace r2c::eval
