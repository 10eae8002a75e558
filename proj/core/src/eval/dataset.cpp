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

#include "r2c/eval/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "r2c/error.hpp"
#include "r2c/eval/templates.hpp"

namespace r2c::eval {
namespace {

using nlohmann::json;

json parse_row(std::string_view line, std::size_t line_no) {
  try {
    json doc = json::parse(line);
    if (!doc.is_object()) throw SchemaError(line_no, "row is not a JSON object");
    return doc;
  } catch (const json::parse_error& e) {
    throw SchemaError(line_no, std::string("malformed JSON: ") + e.what());
  }
}

std::string string_field(const json& doc, const char* name,
                         std::size_t line_no) {
  const auto it = doc.find(name);
  if (it == doc.end()) {
    throw SchemaError(line_no, std::string("missing field '") + name + "'");
  }
  if (!it->is_string()) {
    throw SchemaError(line_no, std::string("field '") + name +
                                   "' is not a string");
  }
  return it->get<std::string>();
}

std::vector<std::string> answers_field(const json& doc, std::size_t line_no) {
  const auto it = doc.find("answers");
  if (it == doc.end()) throw SchemaError(line_no, "missing field 'answers'");
  if (!it->is_array()) {
    throw SchemaError(line_no, "field 'answers' is not a list");
  }
  std::vector<std::string> answers;
  for (const json& a : *it) {
    if (!a.is_string()) {
      throw SchemaError(line_no, "field 'answers' holds a non-string value");
    }
    answers.push_back(a.get<std::string>());
  }
  return answers;
}

std::string id_field(const json& doc, const char* name, std::size_t line_no) {
  const auto it = doc.find(name);
  if (it == doc.end() || it->is_null()) return "line-" + std::to_string(line_no);
  return it->is_string() ? it->get<std::string>() : it->dump();
}

}  // namespace

DatasetFormat parse_format(std::string_view name) {
  if (name == "nq") return DatasetFormat::kNq;
  if (name == "longbench") return DatasetFormat::kLongBench;
  throw ConfigError("unknown dataset format '" + std::string(name) +
                    "' (expected nq or longbench)");
}

std::string_view to_string(DatasetFormat format) noexcept {
  return format == DatasetFormat::kNq ? "nq" : "longbench";
}

std::string frame_passage(std::size_t k, std::string_view title,
                          std::string_view text) {
  std::string out = "Document [" + std::to_string(k) + "](Title: ";
  out += title;
  out += ") ";
  out += text;
  return out;
}

bool is_qa_task(std::string_view task) {
  static constexpr std::string_view kQa[] = {
      "nq",       "narrativeqa", "qasper",  "multifieldqa_en",
      "hotpotqa", "2wikimqa",    "musique", "triviaqa"};
  return std::find(std::begin(kQa), std::end(kQa), task) != std::end(kQa);
}

EvalRecord parse_nq_row(std::string_view line, std::size_t line_no) {
  const json doc = parse_row(line, line_no);
  EvalRecord record;
  record.id = id_field(doc, "id", line_no);
  record.task_tag = "nq";
  record.question = string_field(doc, "question", line_no);
  record.answers = answers_field(doc, line_no);
  if (record.answers.empty()) {
    throw SchemaError(line_no, "QA record has no answers");
  }
  const auto ctxs = doc.find("ctxs");
  if (ctxs == doc.end() || !ctxs->is_array()) {
    throw SchemaError(line_no, "missing list field 'ctxs'");
  }
  std::size_t k = 0;
  for (const json& ctx : *ctxs) {
    if (!ctx.is_object()) throw SchemaError(line_no, "ctx is not an object");
    const std::string text = string_field(ctx, "text", line_no);
    const std::string title =
        ctx.contains("title") && ctx["title"].is_string()
            ? ctx["title"].get<std::string>()
            : std::string();
    record.context_units.push_back(frame_passage(++k, title, text));
  }
  if (record.context_units.empty()) {
    throw SchemaError(line_no, "record has no passages");
  }
  return record;
}

EvalRecord parse_longbench_row(std::string_view line, std::size_t line_no) {
  const json doc = parse_row(line, line_no);
  EvalRecord record;
  record.id = id_field(doc, "_id", line_no);
  record.task_tag = string_field(doc, "dataset", line_no);
  record.question = string_field(doc, "input", line_no);
  record.answers = answers_field(doc, line_no);
  const std::string context = string_field(doc, "context", line_no);
  if (context.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw SchemaError(line_no, "record has an empty context");
  }
  if (record.answers.empty() && is_qa_task(record.task_tag)) {
    throw SchemaError(line_no, "QA record has no answers");
  }
  record.context_units.push_back(context);
  return record;
}

DatasetReader::DatasetReader(std::unique_ptr<std::istream> in,
                             DatasetFormat format, LoadOptions options)
    : in_(std::move(in)), format_(format), options_(options) {}

DatasetReader DatasetReader::open(const std::filesystem::path& path,
                                  DatasetFormat format, LoadOptions options) {
  auto in = std::make_unique<std::ifstream>(path, std::ios::binary);
  if (!*in) throw SchemaError(0, "cannot open dataset " + path.string());
  return DatasetReader(std::move(in), format, options);
}

std::optional<EvalRecord> DatasetReader::next() {
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    try {
      return format_ == DatasetFormat::kNq ? parse_nq_row(line, line_)
                                           : parse_longbench_row(line, line_);
    } catch (const SchemaError& e) {
      if (options_.strict) throw;
      issues_.push_back({line_, e.what()});
    }
  }
  return std::nullopt;
}

std::vector<EvalRecord> load_dataset(const std::filesystem::path& path,
                                     DatasetFormat format,
                                     LoadOptions options) {
  DatasetReader reader = DatasetReader::open(path, format, options);
  std::vector<EvalRecord> records;
  while (auto record = reader.next()) records.push_back(std::move(*record));
  return records;
}

Prompt make_prompt(const EvalRecord& record, DatasetFormat format) {
  Prompt prompt;
  prompt.source_id = record.id;
  prompt.question = record.question;
  const std::string task =
      format == DatasetFormat::kNq ? std::string("nq") : record.task_tag;
  prompt.instruction = template_framing(template_for(task));
  if (format == DatasetFormat::kNq) {
    prompt.unit_hints = record.context_units;
    for (const std::string& unit : record.context_units) {
      if (!prompt.context.empty()) prompt.context += '\n';
      prompt.context += unit;
    }
  } else {
    for (const std::string& unit : record.context_units) {
      if (!prompt.context.empty()) prompt.context += "\n\n";
      prompt.context += unit;
    }
  }
  return prompt;
}

std::vector<EvalRecord> sample_records(std::vector<EvalRecord> records,
                                       double fraction, std::uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw ConfigError("sample fraction must lie in (0, 1]");
  }
  const auto keep = static_cast<std::size_t>(
      std::ceil(fraction * static_cast<double>(records.size())));
  std::vector<std::size_t> index(records.size());
  std::iota(index.begin(), index.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(index.begin(), index.end(), rng);
  index.resize(keep);
  std::sort(index.begin(), index.end());
  std::vector<EvalRecord> sample;
  sample.reserve(keep);
  for (std::size_t i : index) sample.push_back(std::move(records[i]));
  return sample;
}

}  // namespace r2c::eval
