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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "r2c/types.hpp"

namespace r2c::eval {

enum class DatasetFormat { kNq, kLongBench };

DatasetFormat parse_format(std::string_view name);
std::string_view to_string(DatasetFormat format) noexcept;

struct EvalRecord {
  std::string id;
  std::string question;
  std::vector<std::string> answers;
  // NQ: one framed passage per retrieved document. LongBench: the whole
  // context as a single element.
  std::vector<std::string> context_units;
  // NQ records use "nq"; LongBench records carry their dataset name.
  std::string task_tag;
};

struct LoadOptions {
  // Strict: the first malformed row throws SchemaError. Lenient: malformed
  // rows are recorded in issues() and skipped.
  bool strict = true;
};

struct RowIssue {
  std::size_t line = 0;
  std::string message;
};

// Streams JSON-lines records in file order. Blank lines are ignored.
class DatasetReader {
 public:
  DatasetReader(std::unique_ptr<std::istream> in, DatasetFormat format,
                LoadOptions options = {});

  // Throws SchemaError (line 0) when the file cannot be opened.
  static DatasetReader open(const std::filesystem::path& path,
                            DatasetFormat format, LoadOptions options = {});

  std::optional<EvalRecord> next();

  const std::vector<RowIssue>& issues() const noexcept { return issues_; }

 private:
  std::unique_ptr<std::istream> in_;
  DatasetFormat format_;
  LoadOptions options_;
  std::size_t line_ = 0;
  std::vector<RowIssue> issues_;
};

// Parses one row; throws SchemaError on violations.
EvalRecord parse_nq_row(std::string_view line, std::size_t line_no);
EvalRecord parse_longbench_row(std::string_view line, std::size_t line_no);

std::vector<EvalRecord> load_dataset(const std::filesystem::path& path,
                                     DatasetFormat format,
                                     LoadOptions options = {});

// "Document [k](Title: <title>) <text>", k counted from 1.
std::string frame_passage(std::size_t k, std::string_view title,
                          std::string_view text);

// Builds the compression input for a record: instruction framing from the
// task template, the raw question, and the context. NQ passages become unit
// hints; LongBench contexts are left to paragraph segmentation.
Prompt make_prompt(const EvalRecord& record, DatasetFormat format);

// True for tasks scored by Span EM / answer matching.
bool is_qa_task(std::string_view task);

// Deterministic subsample of ceil(fraction * n) records in file order.
std::vector<EvalRecord> sample_records(std::vector<EvalRecord> records,
                                       double fraction, std::uint64_t seed);

}  // namespace r2c::eval
