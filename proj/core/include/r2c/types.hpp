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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace r2c {

// Token quantities are signed so budget arithmetic (E_comp - removed, slack)
// never wraps.
using TokenCount = std::int64_t;

// Half-open byte range [start, end) into some owning text.
struct CharSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t size() const noexcept { return end - start; }
  bool contains(std::size_t offset) const noexcept {
    return offset >= start && offset < end;
  }
  friend bool operator==(const CharSpan&, const CharSpan&) = default;
};

// The unit of compression: instruction, context and question. Only the
// context is ever pruned.
struct Prompt {
  std::string instruction;
  std::string context;
  // May be empty; scorers then see the bare context.
  std::string question;
  std::string source_id;
  // Pre-delimited context units (retrieved passages, demonstrations,
  // dialogue turns). When present, chunking never crosses their boundaries
  // and `context` is expected to be their newline join.
  std::vector<std::string> unit_hints;
};

struct Sentence {
  std::size_t index_in_chunk = 0;
  // Sentence text with surrounding whitespace trimmed.
  std::string text;
  TokenCount token_count = 0;
  double score = 0.0;
  // Tiling span into the parent chunk's text. Spans of consecutive sentences
  // abut; whitespace between two sentences belongs to the later one.
  CharSpan char_span;
};

struct Chunk {
  std::size_t index_original = 0;
  std::string text;
  TokenCount token_count = 0;
  double score = 0.0;
  std::vector<Sentence> sentences;
  // Set when an over-long atomic line was cut at token boundaries.
  bool hard_split = false;
};

// Token-level importance for a byte range of one chunk's text.
struct ScoredSpan {
  std::size_t char_start = 0;
  std::size_t char_end = 0;
  double score = 0.0;

  friend bool operator==(const ScoredSpan&, const ScoredSpan&) = default;
};

enum class Pooling { kMean, kMax, kSum };
enum class Ordering { kOriginal, kSorted };

std::string_view to_string(Pooling pooling) noexcept;
std::string_view to_string(Ordering ordering) noexcept;
// Throws ConfigError on unknown names.
Pooling parse_pooling(std::string_view name);
Ordering parse_ordering(std::string_view name);

struct CompressionConfig {
  // Target prompt length T, counted over instruction + context + question.
  TokenCount target_tokens = 0;
  // Share of the removal budget spent on whole chunks.
  double rho = 0.8;
  // Exponent on inverted chunk scores when splitting the sentence budget.
  double gamma = 1.0;
  Pooling pooling = Pooling::kMean;
  Ordering ordering = Ordering::kOriginal;
  TokenCount max_chunk_tokens = 128;
  // Floor applied to chunk scores before inversion.
  double epsilon = 1e-12;
  // Extension, off by default: unused chunk-stage budget is added to the
  // sentence-stage budget.
  bool slack_rollover = false;

  // Throws ConfigError when any field is out of range.
  void validate() const;
};

// Removal budgets. e_chunk + e_sent == e_comp always holds.
struct BudgetPlan {
  TokenCount e_comp = 0;
  TokenCount e_chunk = 0;
  TokenCount e_sent = 0;
  // Sentence budgets of the kept chunks, in selection (score) order.
  std::vector<TokenCount> per_chunk_budgets;
};

struct KeptChunk {
  std::size_t index_original = 0;
  // Original sentence indices that survived, ascending.
  std::vector<std::size_t> kept_sentences;
  TokenCount sentence_budget = 0;
  TokenCount removed_tokens = 0;
  // True when every sentence was pruned; the chunk is omitted from the text.
  bool emptied = false;
};

struct CompressionResult {
  std::string compressed_context;
  // |P_C| and the unit-accounted size after pruning:
  // compressed_tokens == original_tokens - removed_chunk_tokens
  //                      - removed_sentence_tokens.
  TokenCount original_tokens = 0;
  TokenCount compressed_tokens = 0;
  // Count of instruction + joined compressed context + question, measured
  // after re-joining with newline/space glue.
  TokenCount rejoined_tokens = 0;
  TokenCount removed_chunk_tokens = 0;
  TokenCount removed_sentence_tokens = 0;
  BudgetPlan plan;
  // Kept chunks in output order.
  std::vector<KeptChunk> kept_chunks;
  // Original indices of chunks dropped by the chunk stage, ascending.
  std::vector<std::size_t> dropped_chunks;
  std::size_t chunk_count = 0;

  bool noop = false;
  bool all_chunks_dropped = false;
  bool empty_output = false;
  bool hard_split = false;

  std::chrono::nanoseconds scoring_time{0};
  std::chrono::nanoseconds total_time{0};
};

}  // namespace r2c
