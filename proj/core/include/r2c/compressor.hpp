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

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "r2c/scorer.hpp"
#include "r2c/sentence_splitter.hpp"
#include "r2c/tokenizer.hpp"
#include "r2c/types.hpp"

namespace r2c {

// Splits a removal budget: e_chunk = round(rho * e_comp) and
// e_sent = e_comp - e_chunk, so the two always partition e_comp.
BudgetPlan split_budget(TokenCount e_comp, double rho);

// e_comp = max(0, original_tokens - T), then split_budget.
BudgetPlan plan_budgets(TokenCount original_tokens,
                        const CompressionConfig& config);

struct PrefixSelection {
  std::size_t kept = 0;
  TokenCount removed_tokens = 0;
};

// The pruning loop shared by both stages. Units arrive sorted by descending
// importance; the loop stops at the first position whose suffix fits in the
// budget, keeps everything before it and removes the suffix. When no suffix
// fits, everything is kept.
//
// Guarantees removed <= budget and, when kept >= 1,
// budget - removed < sizes[kept - 1].
PrefixSelection select_prefix(std::span<const TokenCount> sizes,
                              TokenCount budget);

// Chunk stage over chunks already in importance order.
PrefixSelection select_chunks(std::span<const Chunk> sorted_chunks,
                              TokenCount e_chunk);
// Sentence stage over one chunk's sentences in importance order.
PrefixSelection select_sentences(std::span<const Sentence> sorted_sentences,
                                 TokenCount budget);

// Real-valued shares of the sentence budget: (1 / max(c_i, eps))^gamma,
// normalized to sum to 1. gamma = 0 gives uniform shares.
std::vector<double> sentence_budget_shares(std::span<const double> chunk_scores,
                                           double gamma, double epsilon);

// Integer sentence budgets per kept chunk, floor plus largest remainder (ties
// go to the lower position). Sums to `e_sent` exactly.
std::vector<TokenCount> allocate_sentence_budgets(
    std::span<const double> chunk_scores, TokenCount e_sent, double gamma,
    double epsilon);

struct SelectedChunk {
  // Position in the chunk list passed to select_hierarchical.
  std::size_t position = 0;
  // Kept sentence positions in importance order.
  std::vector<std::size_t> kept_sentences;
  TokenCount budget = 0;
  TokenCount removed_tokens = 0;
};

struct HierarchicalSelection {
  BudgetPlan plan;
  // All chunk positions in importance order.
  std::vector<std::size_t> chunk_order;
  // Kept chunks in importance order.
  std::vector<SelectedChunk> kept;
  TokenCount removed_chunk_tokens = 0;
  TokenCount removed_sentence_tokens = 0;
};

// Two-stage pruning over scored chunks: drop whole chunks with e_chunk, then
// drop sentences inside each kept chunk with its share of e_sent. Chunk and
// sentence scores must already be filled in.
HierarchicalSelection select_hierarchical(std::span<const Chunk> chunks,
                                          TokenCount e_comp,
                                          const CompressionConfig& config);

// Builds the compressed context. Sentences always appear in their original
// order; chunks in original order, or in importance order for
// Ordering::kSorted. A chunk that kept every sentence is emitted verbatim,
// otherwise its kept sentences are joined with a space. Chunks are joined
// with a newline and emptied chunks are skipped.
std::string restore_order_and_join(std::span<const Chunk> chunks,
                                   const HierarchicalSelection& selection,
                                   Ordering ordering);

// End-to-end compression of one prompt: segment, score, aggregate, select,
// join. Instruction and question are never touched; the budget counts them.
CompressionResult compress(
    const Prompt& prompt, const CompressionConfig& config,
    const Scorer& scorer, const TokenCounter& counter,
    const SentenceSplitter& splitter = default_sentence_splitter());

// Bundles the collaborators of compress() for repeated use.
class Compressor {
 public:
  Compressor(CompressionConfig config, std::shared_ptr<const Scorer> scorer,
             std::shared_ptr<const TokenCounter> counter);

  CompressionResult operator()(const Prompt& prompt) const {
    return compress(prompt, config_, *scorer_, *counter_);
  }

  const CompressionConfig& config() const noexcept { return config_; }
  const Scorer& scorer() const noexcept { return *scorer_; }
  const TokenCounter& counter() const noexcept { return *counter_; }

 private:
  CompressionConfig config_;
  std::shared_ptr<const Scorer> scorer_;
  std::shared_ptr<const TokenCounter> counter_;
};

}  // namespace r2c
