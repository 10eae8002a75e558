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

#include "r2c/eval/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "r2c/aggregator.hpp"
#include "r2c/error.hpp"
#include "r2c/eval/metrics.hpp"
#include "r2c/eval/templates.hpp"
#include "r2c/segmenter.hpp"

namespace r2c::eval {

Ablation parse_ablation(std::string_view name) {
  if (name == "hierarchical" || name == "none") return Ablation::kHierarchical;
  if (name == "chunk-only") return Ablation::kChunkOnly;
  if (name == "sentence-only") return Ablation::kSentenceOnly;
  if (name == "token-only") return Ablation::kTokenOnly;
  throw ConfigError("unknown ablation '" + std::string(name) +
                    "' (expected hierarchical, chunk-only, sentence-only or "
                    "token-only)");
}

std::string_view to_string(Ablation ablation) noexcept {
  switch (ablation) {
    case Ablation::kChunkOnly:
      return "chunk-only";
    case Ablation::kSentenceOnly:
      return "sentence-only";
    case Ablation::kTokenOnly:
      return "token-only";
    case Ablation::kHierarchical:
      break;
  }
  return "hierarchical";
}

CompressionConfig apply_ablation(CompressionConfig config, Ablation ablation) {
  if (ablation == Ablation::kChunkOnly) config.rho = 1.0;
  if (ablation == Ablation::kSentenceOnly) config.rho = 0.0;
  return config;
}

CompressionResult compress_tokens_only(const Prompt& prompt,
                                       const CompressionConfig& config,
                                       const Scorer& scorer,
                                       const TokenCounter& counter) {
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  config.validate();
  const std::vector<Chunk> chunks =
      segment_context(prompt.context, prompt.unit_hints, config, counter);

  CompressionResult result;
  result.chunk_count = chunks.size();
  TokenCount context_tokens = 0;
  for (const Chunk& c : chunks) context_tokens += c.token_count;
  const TokenCount framing =
      counter.count(prompt.instruction) + counter.count(prompt.question);
  result.original_tokens = framing + context_tokens;
  const TokenCount e_comp = result.original_tokens - config.target_tokens;
  if (e_comp <= 0) {
    result.noop = true;
    result.compressed_context = prompt.context;
    result.compressed_tokens = result.original_tokens;
    result.rejoined_tokens = framing + counter.count(prompt.context);
    result.total_time = Clock::now() - started;
    return result;
  }

  ScoreRequest request;
  request.question = prompt.question;
  request.backend = scorer.name();
  for (const Chunk& c : chunks) request.chunks.push_back(c.text);
  const auto scoring_started = Clock::now();
  const ScoreResponse response = scorer.score(request);
  result.scoring_time = Clock::now() - scoring_started;
  validate_response(request, response);

  struct Piece {
    std::string_view text;
    double score;
    TokenCount tokens;
  };
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    const std::string_view text = chunks[i].text;
    for (const ScoredSpan& s : response.per_chunk[i]) {
      const std::string_view piece =
          text.substr(s.char_start, s.char_end - s.char_start);
      pieces.push_back({piece, s.score, counter.count(piece)});
    }
  }
  std::vector<double> scores;
  for (const Piece& p : pieces) scores.push_back(p.score);
  const std::vector<std::size_t> order = sort_by_importance(scores);
  std::vector<TokenCount> sizes;
  for (std::size_t k : order) sizes.push_back(pieces[k].tokens);
  const PrefixSelection sel = select_prefix(sizes, e_comp);

  std::vector<std::size_t> kept(order.begin(), order.begin() + sel.kept);
  std::sort(kept.begin(), kept.end());
  for (std::size_t k : kept) {
    if (!result.compressed_context.empty()) result.compressed_context += ' ';
    result.compressed_context += pieces[k].text;
  }
  result.plan = split_budget(e_comp, 1.0);
  result.removed_chunk_tokens = 0;
  result.removed_sentence_tokens = sel.removed_tokens;
  result.compressed_tokens = result.original_tokens - sel.removed_tokens;
  result.empty_output = result.compressed_context.empty();
  result.rejoined_tokens = framing + counter.count(result.compressed_context);
  result.total_time = Clock::now() - started;
  return result;
}

Aggregates compute_aggregates(std::span<const RecordRow> rows) {
  Aggregates agg;
  agg.records = rows.size();
  double metric_sum = 0.0;
  std::size_t ok = 0;
  for (const RecordRow& row : rows) {
    if (!row.error.empty()) {
      ++agg.failed;
      continue;
    }
    ++ok;
    agg.mean_original_tokens += static_cast<double>(row.original_tokens);
    agg.mean_compressed_tokens += static_cast<double>(row.compressed_tokens);
    agg.mean_token_ratio += row.token_ratio;
    agg.mean_latency_ms += row.latency_ms;
    agg.mean_scoring_ms += row.scoring_ms;
    if (row.metric) {
      metric_sum += *row.metric;
      ++agg.metric_count;
    }
  }
  if (ok > 0) {
    const double n = static_cast<double>(ok);
    agg.mean_original_tokens /= n;
    agg.mean_compressed_tokens /= n;
    agg.mean_token_ratio /= n;
    agg.mean_latency_ms /= n;
    agg.mean_scoring_ms /= n;
  }
  if (agg.metric_count > 0) {
    agg.metric_mean = metric_sum / static_cast<double>(agg.metric_count);
  }
  return agg;
}

namespace {

RecordRow run_record(const EvalRecord& record, DatasetFormat format,
                     const CompressionConfig& config, const Scorer& scorer,
                     const TokenCounter& counter,
                     const HarnessOptions& options) {
  using Clock = std::chrono::steady_clock;
  RecordRow row;
  row.id = record.id;
  row.task = record.task_tag;
  try {
    const Prompt prompt = make_prompt(record, format);
    const auto started = Clock::now();
    const CompressionResult result =
        options.ablation == Ablation::kTokenOnly
            ? compress_tokens_only(prompt, config, scorer, counter)
            : compress(prompt, config, scorer, counter);
    const auto elapsed = Clock::now() - started;
    row.original_tokens = result.original_tokens;
    row.compressed_tokens = result.compressed_tokens;
    row.rejoined_tokens = result.rejoined_tokens;
    row.token_ratio = result.original_tokens == 0
                          ? 1.0
                          : static_cast<double>(result.compressed_tokens) /
                                static_cast<double>(result.original_tokens);
    row.latency_ms =
        std::chrono::duration<double, std::milli>(elapsed).count();
    row.scoring_ms =
        std::chrono::duration<double, std::milli>(result.scoring_time).count();
    if (options.generator != nullptr && is_qa_task(record.task_tag)) {
      const std::string task =
          format == DatasetFormat::kNq ? std::string("nq") : record.task_tag;
      const std::string rendered = render_prompt(
          template_for(task), result.compressed_context, record.question);
      row.metric = span_em(options.generator->generate(rendered), record.answers);
    }
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

EvalReport measure_compression(std::span<const EvalRecord> records,
                               DatasetFormat format,
                               const CompressionConfig& config,
                               const Scorer& scorer,
                               const TokenCounter& counter,
                               const HarnessOptions& options) {
  const CompressionConfig effective = apply_ablation(config, options.ablation);
  effective.validate();

  EvalReport report;
  report.tokenizer = counter.name();
  report.scorer = scorer.name();
  report.ablation = std::string(to_string(options.ablation));
  report.config = effective;
  report.rows.resize(records.size());

  const std::size_t jobs =
      std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(records.size(), 1));
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < records.size(); i = next++) {
      report.rows[i] =
          run_record(records[i], format, effective, scorer, counter, options);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  report.aggregates = compute_aggregates(report.rows);
  return report;
}

}  // namespace r2c::eval
