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

#include "r2c/compressor.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "r2c/aggregator.hpp"
#include "r2c/error.hpp"
#include "r2c/segmenter.hpp"

namespace r2c {

BudgetPlan split_budget(TokenCount e_comp, double rho) {
  BudgetPlan plan;
  plan.e_comp = std::max<TokenCount>(0, e_comp);
  plan.e_chunk = std::clamp<TokenCount>(
      static_cast<TokenCount>(std::llround(rho * static_cast<double>(plan.e_comp))),
      0, plan.e_comp);
  plan.e_sent = plan.e_comp - plan.e_chunk;
  return plan;
}

BudgetPlan plan_budgets(TokenCount original_tokens,
                        const CompressionConfig& config) {
  return split_budget(original_tokens - config.target_tokens, config.rho);
}

PrefixSelection select_prefix(std::span<const TokenCount> sizes,
                              TokenCount budget) {
  std::vector<TokenCount> suffix(sizes.size() + 1, 0);
  for (std::size_t i = sizes.size(); i-- > 0;) {
    suffix[i] = suffix[i + 1] + sizes[i];
  }
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (budget >= suffix[i]) return {i, suffix[i]};
  }
  return {sizes.size(), 0};
}

PrefixSelection select_chunks(std::span<const Chunk> sorted_chunks,
                              TokenCount e_chunk) {
  std::vector<TokenCount> sizes;
  sizes.reserve(sorted_chunks.size());
  for (const Chunk& c : sorted_chunks) sizes.push_back(c.token_count);
  return select_prefix(sizes, e_chunk);
}

PrefixSelection select_sentences(std::span<const Sentence> sorted_sentences,
                                 TokenCount budget) {
  std::vector<TokenCount> sizes;
  sizes.reserve(sorted_sentences.size());
  for (const Sentence& s : sorted_sentences) sizes.push_back(s.token_count);
  return select_prefix(sizes, budget);
}

std::vector<double> sentence_budget_shares(std::span<const double> chunk_scores,
                                           double gamma, double epsilon) {
  std::vector<double> shares(chunk_scores.size(), 0.0);
  if (chunk_scores.empty()) return shares;
  std::vector<double> floored(chunk_scores.size());
  for (std::size_t i = 0; i < chunk_scores.size(); ++i) {
    floored[i] = std::max(chunk_scores[i], epsilon);
  }
  // Weights are taken relative to the smallest score so the largest weight
  // is exactly 1; (1/c_i)^g / sum_j (1/c_j)^g is unchanged by this.
  const double smallest = *std::min_element(floored.begin(), floored.end());
  double total = 0.0;
  for (std::size_t i = 0; i < floored.size(); ++i) {
    shares[i] = gamma == 0.0 ? 1.0 : std::pow(smallest / floored[i], gamma);
    total += shares[i];
  }
  for (double& s : shares) s /= total;
  return shares;
}

std::vector<TokenCount> allocate_sentence_budgets(
    std::span<const double> chunk_scores, TokenCount e_sent, double gamma,
    double epsilon) {
  const std::size_t n = chunk_scores.size();
  std::vector<TokenCount> budgets(n, 0);
  if (n == 0 || e_sent <= 0) return budgets;

  const std::vector<double> shares =
      sentence_budget_shares(chunk_scores, gamma, epsilon);
  std::vector<double> fraction(n);
  TokenCount assigned = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double quota = shares[i] * static_cast<double>(e_sent);
    const double whole = std::floor(quota);
    budgets[i] = static_cast<TokenCount>(whole);
    fraction[i] = quota - whole;
    assigned += budgets[i];
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fraction[a] > fraction[b];
  });
  TokenCount remainder = e_sent - assigned;
  for (std::size_t k = 0; remainder > 0; k = (k + 1) % n, --remainder) {
    ++budgets[order[k]];
  }
  // Rounding noise can only overshoot by a token; take it back from the
  // smallest fractions.
  for (std::size_t k = n; remainder < 0 && k-- > 0;) {
    if (budgets[order[k]] > 0) {
      --budgets[order[k]];
      ++remainder;
    }
  }
  return budgets;
}

HierarchicalSelection select_hierarchical(std::span<const Chunk> chunks,
                                          TokenCount e_comp,
                                          const CompressionConfig& config) {
  HierarchicalSelection sel;
  sel.plan = split_budget(e_comp, config.rho);
  sel.chunk_order = sort_chunks_by_importance(chunks);

  std::vector<TokenCount> sizes;
  sizes.reserve(chunks.size());
  for (std::size_t pos : sel.chunk_order) sizes.push_back(chunks[pos].token_count);
  const PrefixSelection chunk_stage = select_prefix(sizes, sel.plan.e_chunk);
  sel.removed_chunk_tokens = chunk_stage.removed_tokens;

  if (config.slack_rollover) {
    const TokenCount slack = sel.plan.e_chunk - chunk_stage.removed_tokens;
    sel.plan.e_chunk -= slack;
    sel.plan.e_sent += slack;
  }

  std::vector<double> kept_scores;
  for (std::size_t k = 0; k < chunk_stage.kept; ++k) {
    kept_scores.push_back(chunks[sel.chunk_order[k]].score);
  }
  sel.plan.per_chunk_budgets = allocate_sentence_budgets(
      kept_scores, sel.plan.e_sent, config.gamma, config.epsilon);

  for (std::size_t k = 0; k < chunk_stage.kept; ++k) {
    const Chunk& chunk = chunks[sel.chunk_order[k]];
    SelectedChunk kept;
    kept.position = sel.chunk_order[k];
    kept.budget = sel.plan.per_chunk_budgets[k];

    const std::vector<std::size_t> order =
        sort_sentences_by_importance(chunk.sentences);
    std::vector<TokenCount> sentence_sizes;
    sentence_sizes.reserve(order.size());
    for (std::size_t m : order) {
      sentence_sizes.push_back(chunk.sentences[m].token_count);
    }
    const PrefixSelection stage = select_prefix(sentence_sizes, kept.budget);
    kept.kept_sentences.assign(order.begin(), order.begin() + stage.kept);
    kept.removed_tokens = stage.removed_tokens;
    sel.removed_sentence_tokens += stage.removed_tokens;
    sel.kept.push_back(std::move(kept));
  }
  return sel;
}

namespace {

// Text contributed by one kept chunk; empty when every sentence was pruned.
std::string render_chunk(const Chunk& chunk, const SelectedChunk& kept) {
  if (kept.kept_sentences.size() == chunk.sentences.size()) return chunk.text;
  std::vector<std::size_t> positions = kept.kept_sentences;
  std::sort(positions.begin(), positions.end());
  std::string out;
  for (std::size_t m : positions) {
    if (!out.empty()) out += ' ';
    out += chunk.sentences[m].text;
  }
  return out;
}

}  // namespace

std::string restore_order_and_join(std::span<const Chunk> chunks,
                                   const HierarchicalSelection& selection,
                                   Ordering ordering) {
  std::vector<const SelectedChunk*> kept;
  kept.reserve(selection.kept.size());
  for (const SelectedChunk& k : selection.kept) kept.push_back(&k);
  if (ordering == Ordering::kOriginal) {
    std::stable_sort(kept.begin(), kept.end(),
                     [&](const SelectedChunk* a, const SelectedChunk* b) {
                       return chunks[a->position].index_original <
                              chunks[b->position].index_original;
                     });
  }
  std::string out;
  for (const SelectedChunk* k : kept) {
    std::string piece = render_chunk(chunks[k->position], *k);
    if (piece.empty()) continue;
    if (!out.empty()) out += '\n';
    out += piece;
  }
  return out;
}

CompressionResult compress(const Prompt& prompt,
                           const CompressionConfig& config,
                           const Scorer& scorer, const TokenCounter& counter,
                           const SentenceSplitter& splitter) {
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  config.validate();

  std::vector<Chunk> chunks = segment_context(prompt.context, prompt.unit_hints,
                                              config, counter, splitter);
  const TokenCount framing =
      counter.count(prompt.instruction) + counter.count(prompt.question);
  TokenCount context_tokens = 0;
  for (const Chunk& c : chunks) context_tokens += c.token_count;

  CompressionResult result;
  result.chunk_count = chunks.size();
  result.original_tokens = framing + context_tokens;
  result.hard_split = std::any_of(chunks.begin(), chunks.end(),
                                  [](const Chunk& c) { return c.hard_split; });
  const TokenCount e_comp = result.original_tokens - config.target_tokens;

  if (e_comp <= 0) {
    result.noop = true;
    result.compressed_context = prompt.context;
    result.compressed_tokens = result.original_tokens;
    result.plan = split_budget(0, config.rho);
    for (const Chunk& c : chunks) {
      KeptChunk kept;
      kept.index_original = c.index_original;
      kept.kept_sentences.resize(c.sentences.size());
      std::iota(kept.kept_sentences.begin(), kept.kept_sentences.end(),
                std::size_t{0});
      result.kept_chunks.push_back(std::move(kept));
    }
    result.rejoined_tokens = framing + counter.count(result.compressed_context);
    result.total_time = Clock::now() - started;
    return result;
  }

  ScoreRequest request;
  request.question = prompt.question;
  request.backend = scorer.name();
  request.chunks.reserve(chunks.size());
  for (const Chunk& c : chunks) request.chunks.push_back(c.text);

  const auto scoring_started = Clock::now();
  const ScoreResponse response = scorer.score(request);
  result.scoring_time = Clock::now() - scoring_started;
  validate_response(request, response);

  aggregate_chunk_scores(chunks, response.per_chunk, config.pooling);
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    aggregate_sentence_scores(chunks[i], response.per_chunk[i], config.pooling);
  }

  const HierarchicalSelection sel = select_hierarchical(chunks, e_comp, config);
  result.plan = sel.plan;
  result.removed_chunk_tokens = sel.removed_chunk_tokens;
  result.removed_sentence_tokens = sel.removed_sentence_tokens;
  result.compressed_tokens = result.original_tokens -
                             sel.removed_chunk_tokens -
                             sel.removed_sentence_tokens;
  result.compressed_context =
      restore_order_and_join(chunks, sel, config.ordering);

  std::vector<const SelectedChunk*> output_order;
  for (const SelectedChunk& k : sel.kept) output_order.push_back(&k);
  if (config.ordering == Ordering::kOriginal) {
    std::sort(output_order.begin(), output_order.end(),
              [&](const SelectedChunk* a, const SelectedChunk* b) {
                return chunks[a->position].index_original <
                       chunks[b->position].index_original;
              });
  }
  std::vector<bool> kept_flag(chunks.size(), false);
  for (const SelectedChunk* k : output_order) {
    kept_flag[k->position] = true;
    KeptChunk kept;
    kept.index_original = chunks[k->position].index_original;
    kept.kept_sentences = k->kept_sentences;
    std::sort(kept.kept_sentences.begin(), kept.kept_sentences.end());
    kept.sentence_budget = k->budget;
    kept.removed_tokens = k->removed_tokens;
    kept.emptied = k->kept_sentences.empty();
    result.kept_chunks.push_back(std::move(kept));
  }
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    if (!kept_flag[i]) result.dropped_chunks.push_back(chunks[i].index_original);
  }
  result.all_chunks_dropped = sel.kept.empty();
  result.empty_output = result.compressed_context.empty();
  result.rejoined_tokens = framing + counter.count(result.compressed_context);
  result.total_time = Clock::now() - started;
  return result;
}

Compressor::Compressor(CompressionConfig config,
                       std::shared_ptr<const Scorer> scorer,
                       std::shared_ptr<const TokenCounter> counter)
    : config_(config), scorer_(std::move(scorer)), counter_(std::move(counter)) {
  config_.validate();
  if (!scorer_ || !counter_) {
    throw ConfigError("compressor needs a scorer and a token counter");
  }
}

}  // namespace r2c
