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

#include "r2c/eval/report.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "r2c/error.hpp"

namespace r2c::eval {
namespace {

std::string tsv_cell(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  }
  return out;
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

}  // namespace

void write_rows_tsv(std::ostream& out, const EvalReport& report) {
  for (std::size_t c = 0; c < kReportColumns.size(); ++c) {
    out << (c ? "\t" : "") << kReportColumns[c];
  }
  out << '\n';
  for (const RecordRow& row : report.rows) {
    out << tsv_cell(row.id) << '\t' << tsv_cell(row.task) << '\t'
        << row.original_tokens << '\t' << row.compressed_tokens << '\t'
        << row.rejoined_tokens << '\t' << fixed(row.token_ratio, 6) << '\t'
        << fixed(row.latency_ms, 3) << '\t' << fixed(row.scoring_ms, 3) << '\t'
        << (row.metric ? fixed(*row.metric, 4) : std::string()) << '\t'
        << tsv_cell(row.error) << '\n';
  }
}

void write_summary_json(std::ostream& out, const EvalReport& report) {
  const Aggregates& a = report.aggregates;
  const CompressionConfig& c = report.config;
  nlohmann::json doc = {
      {"tokenizer", report.tokenizer},
      {"scorer", report.scorer},
      {"ablation", report.ablation},
      {"config",
       {{"target_tokens", c.target_tokens},
        {"rho", c.rho},
        {"gamma", c.gamma},
        {"pooling", to_string(c.pooling)},
        {"ordering", to_string(c.ordering)},
        {"max_chunk_tokens", c.max_chunk_tokens},
        {"epsilon", c.epsilon},
        {"slack_rollover", c.slack_rollover}}},
      {"aggregates",
       {{"records", a.records},
        {"failed", a.failed},
        {"mean_original_tokens", a.mean_original_tokens},
        {"mean_compressed_tokens", a.mean_compressed_tokens},
        {"mean_token_ratio", a.mean_token_ratio},
        {"mean_latency_ms", a.mean_latency_ms},
        {"mean_scoring_ms", a.mean_scoring_ms},
        {"metric_count", a.metric_count},
        {"metric_mean", a.metric_mean ? nlohmann::json(*a.metric_mean)
                                      : nlohmann::json(nullptr)}}},
      {"columns", kReportColumns},
  };
  out << doc.dump(2) << '\n';
}

void write_report_files(const std::filesystem::path& prefix,
                        const EvalReport& report) {
  const auto open = [](const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write report file " + path.string());
    return out;
  };
  std::ofstream rows = open(prefix.string() + ".tsv");
  write_rows_tsv(rows, report);
  std::ofstream summary = open(prefix.string() + ".summary.json");
  write_summary_json(summary, report);
}

}  // namespace r2c::eval
