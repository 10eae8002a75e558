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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "r2c/compressor.hpp"
#include "r2c/eval/dataset.hpp"
#include "r2c/scorer.hpp"
#include "r2c/tokenizer.hpp"
#include "r2c/types.hpp"

namespace r2c::eval {

// Downstream text generation. Only a stub ships; real model clients plug in
// here.
class TextGenerator {
 public:
  virtual ~TextGenerator() = default;
  virtual std::string generate(std::string_view prompt) const = 0;
};

// Returns the same reply for every prompt.
class EchoGenerator final : public TextGenerator {
 public:
  explicit EchoGenerator(std::string reply) : reply_(std::move(reply)) {}
  std::string generate(std::string_view) const override { return reply_; }

 private:
  std::string reply_;
};

enum class Ablation {
  kHierarchical,
  kChunkOnly,     // rho = 1
  kSentenceOnly,  // rho = 0
  // Diagnostic only: keeps top-scoring token spans and joins them with
  // spaces, which breaks sentences apart.
  kTokenOnly,
};

Ablation parse_ablation(std::string_view name);
std::string_view to_string(Ablation ablation) noexcept;
CompressionConfig apply_ablation(CompressionConfig config, Ablation ablation);

// Token-level pruning used by Ablation::kTokenOnly. Spans are dropped in
// ascending score order with the same stopping rule as the chunk stage.
CompressionResult compress_tokens_only(const Prompt& prompt,
                                       const CompressionConfig& config,
                                       const Scorer& scorer,
                                       const TokenCounter& counter);

struct RecordRow {
  std::string id;
  std::string task;
  TokenCount original_tokens = 0;
  TokenCount compressed_tokens = 0;
  TokenCount rejoined_tokens = 0;
  // compressed_tokens / original_tokens.
  double token_ratio = 0.0;
  double latency_ms = 0.0;
  double scoring_ms = 0.0;
  std::optional<double> metric;
  // Empty on success.
  std::string error;
};

struct Aggregates {
  std::size_t records = 0;
  std::size_t failed = 0;
  double mean_original_tokens = 0.0;
  double mean_compressed_tokens = 0.0;
  double mean_token_ratio = 0.0;
  double mean_latency_ms = 0.0;
  double mean_scoring_ms = 0.0;
  std::size_t metric_count = 0;
  std::optional<double> metric_mean;

  friend bool operator==(const Aggregates&, const Aggregates&) = default;
};

struct EvalReport {
  std::string tokenizer;
  std::string scorer;
  std::string ablation;
  CompressionConfig config;
  std::vector<RecordRow> rows;
  Aggregates aggregates;
};

// Means over successful rows; metric mean over rows that carry a metric.
Aggregates compute_aggregates(std::span<const RecordRow> rows);

struct HarnessOptions {
  std::size_t jobs = 1;
  Ablation ablation = Ablation::kHierarchical;
  // When set, each compressed prompt is rendered with its task template,
  // sent to the generator and scored with Span EM (QA tasks only).
  const TextGenerator* generator = nullptr;
};

// Compresses every record and measures per-record wall-clock latency
// (segmentation through join, scoring included and also reported on its
// own). Failures are recorded per row; the run continues. Rows come back in
// input order whatever the job count.
EvalReport measure_compression(std::span<const EvalRecord> records,
                               DatasetFormat format,
                               const CompressionConfig& config,
                               const Scorer& scorer,
                               const TokenCounter& counter,
                               const HarnessOptions& options = {});

}  // namespace r2c::eval
