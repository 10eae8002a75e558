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

#include <numeric>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "r2c/compressor.hpp"
#include "r2c/error.hpp"
#include "r2c/segmenter.hpp"
#include "support/corpus.hpp"

namespace r2c {
namespace {

const WhitespaceCounter kCounter;

TEST(PlanBudgets, Examples) {
  CompressionConfig cfg;
  cfg.target_tokens = 500;
  EXPECT_EQ(plan_budgets(3018, cfg).e_comp, 2518);

  cfg.target_tokens = 4000;
  const BudgetPlan none = plan_budgets(3018, cfg);
  EXPECT_EQ(none.e_comp, 0);
  EXPECT_EQ(none.e_chunk, 0);
  EXPECT_EQ(none.e_sent, 0);

  const BudgetPlan p = split_budget(100, 0.8);
  EXPECT_EQ(p.e_chunk, 80);
  EXPECT_EQ(p.e_sent, 20);
}

TEST(SplitBudget, PartitionsAndRoundsHalfAway) {
  EXPECT_EQ(split_budget(5, 0.5).e_chunk, 3);
  EXPECT_EQ(split_budget(7, 0.0).e_sent, 7);
  EXPECT_EQ(split_budget(7, 1.0).e_chunk, 7);
  for (TokenCount e = 0; e < 200; ++e) {
    for (double rho : {0.0, 0.1, 0.33, 0.5, 0.8, 1.0}) {
      const BudgetPlan p = split_budget(e, rho);
      EXPECT_EQ(p.e_chunk + p.e_sent, p.e_comp);
      EXPECT_GE(p.e_chunk, 0);
      EXPECT_GE(p.e_sent, 0);
    }
  }
}

TEST(SelectPrefix, HandTraces) {
  const std::vector<TokenCount> chunks = {50, 40, 30, 20};
  PrefixSelection s = select_prefix(chunks, 45);
  EXPECT_EQ(s.kept, 3u);
  EXPECT_EQ(s.removed_tokens, 20);
  EXPECT_LT(45 - s.removed_tokens, chunks[s.kept - 1]);

  s = select_prefix(chunks, 0);
  EXPECT_EQ(s.kept, 4u);
  EXPECT_EQ(s.removed_tokens, 0);

  s = select_prefix(chunks, 140);
  EXPECT_EQ(s.kept, 0u);
  EXPECT_EQ(s.removed_tokens, 140);

  const std::vector<TokenCount> sentences = {10, 8, 5};
  s = select_prefix(sentences, 12);
  EXPECT_EQ(s.kept, 2u);
  EXPECT_EQ(s.removed_tokens, 5);
  EXPECT_EQ(select_prefix(sentences, 0).kept, 3u);
  EXPECT_EQ(select_prefix(sentences, 23).kept, 0u);
  EXPECT_EQ(select_prefix(sentences, 1000).kept, 0u);
}

TEST(SelectPrefix, StopsAtFirstFittingSuffix) {
  // Suffix sums are 16, 6, 5: the loop breaks at position 1, so only the
  // first unit survives even though dropping [5] alone would also fit.
  const std::vector<TokenCount> sizes = {10, 1, 5};
  const PrefixSelection s = select_prefix(sizes, 6);
  EXPECT_EQ(s.kept, 1u);
  EXPECT_EQ(s.removed_tokens, 6);
}

TEST(AllocateSentenceBudgets, Examples) {
  const std::vector<double> four = {0.9, 0.1, 0.5, 0.3};
  EXPECT_EQ(allocate_sentence_budgets(four, 100, 0.0, 1e-12),
            (std::vector<TokenCount>{25, 25, 25, 25}));
  const std::vector<double> two = {0.2, 0.1};
  EXPECT_EQ(allocate_sentence_budgets(two, 30, 1.0, 1e-12),
            (std::vector<TokenCount>{10, 20}));
  EXPECT_EQ(allocate_sentence_budgets(two, 31, 1.0, 1e-12),
            (std::vector<TokenCount>{10, 21}));
  const std::vector<double> shares = sentence_budget_shares(two, 1.0, 1e-12);
  EXPECT_NEAR(shares[0], 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(shares[1], 2.0 / 3.0, 1e-15);
}

TEST(AllocateSentenceBudgets, RemainderTiesGoToEarlierChunks) {
  const std::vector<double> three = {0.5, 0.5, 0.5};
  EXPECT_EQ(allocate_sentence_budgets(three, 5, 1.0, 1e-12),
            (std::vector<TokenCount>{2, 2, 1}));
}

TEST(AllocateSentenceBudgets, ZeroScoresUseEpsilonFloor) {
  const std::vector<double> scores = {0.0, 1.0};
  const std::vector<TokenCount> b = allocate_sentence_budgets(scores, 1000, 1.0, 1e-12);
  EXPECT_EQ(b, (std::vector<TokenCount>{1000, 0}));
  const std::vector<double> all_zero = {0.0, 0.0, 0.0};
  EXPECT_EQ(allocate_sentence_budgets(all_zero, 9, 2.0, 1e-12),
            (std::vector<TokenCount>{3, 3, 3}));
}

TEST(AllocateSentenceBudgets, EmptyAndZero) {
  EXPECT_TRUE(allocate_sentence_budgets({}, 10, 1.0, 1e-12).empty());
  const std::vector<double> s = {0.3, 0.7};
  EXPECT_EQ(allocate_sentence_budgets(s, 0, 1.0, 1e-12),
            (std::vector<TokenCount>{0, 0}));
}

std::vector<Chunk> chunks_with_indices(std::vector<std::string> texts) {
  std::vector<Chunk> out;
  for (std::size_t i = 0; i < texts.size(); ++i) {
    Chunk c;
    c.index_original = i;
    c.text = texts[i];
    c.sentences = split_sentences(c, kCounter);
    for (const Sentence& s : c.sentences) c.token_count += s.token_count;
    out.push_back(std::move(c));
  }
  return out;
}

TEST(RestoreOrderAndJoin, Ordering) {
  const std::vector<Chunk> chunks =
      chunks_with_indices({"Zero.", "One.", "Two.", "Three."});
  HierarchicalSelection sel;
  sel.kept = {{3, {0}, 0, 0}, {0, {0}, 0, 0}};
  EXPECT_EQ(restore_order_and_join(chunks, sel, Ordering::kOriginal),
            "Zero.\nThree.");
  EXPECT_EQ(restore_order_and_join(chunks, sel, Ordering::kSorted),
            "Three.\nZero.");
  sel.kept = {{2, {0}, 0, 0}};
  EXPECT_EQ(restore_order_and_join(chunks, sel, Ordering::kOriginal),
            restore_order_and_join(chunks, sel, Ordering::kSorted));
}

TEST(RestoreOrderAndJoin, SentencesInOriginalOrderAndEmptiedSkipped) {
  const std::vector<Chunk> chunks =
      chunks_with_indices({"A one.  B two.\nC three.", "D four."});
  HierarchicalSelection sel;
  sel.kept = {{0, {2, 0}, 0, 0}, {1, {}, 0, 0}};
  EXPECT_EQ(restore_order_and_join(chunks, sel, Ordering::kSorted),
            "A one. C three.");
  // A chunk that kept everything is emitted verbatim, whitespace included.
  sel.kept = {{0, {1, 0, 2}, 0, 0}};
  EXPECT_EQ(restore_order_and_join(chunks, sel, Ordering::kSorted),
            chunks[0].text);
}

class FixedScorer final : public Scorer {
 public:
  explicit FixedScorer(std::vector<double> per_chunk) : per_chunk_(std::move(per_chunk)) {}
  std::string name() const override { return "fixed"; }
  ScoreResponse score(const ScoreRequest& request) const override {
    ScoreResponse r;
    for (std::size_t i = 0; i < request.chunks.size(); ++i) {
      const std::string& text = request.chunks[i];
      std::vector<ScoredSpan> spans;
      for (const CharSpan& t : WhitespaceCounter().tokenize(text)) {
        spans.push_back({t.start, t.end, per_chunk_.at(i)});
      }
      r.per_chunk.push_back(std::move(spans));
    }
    return r;
  }

 private:
  std::vector<double> per_chunk_;
};

Prompt paragraphs_prompt() {
  Prompt p;
  p.instruction = "Answer the question.";
  p.question = "Which river?";
  p.context =
      "The river bends twice. It floods in spring.\n\n"
      "Markets open early. Traders arrive by boat. Prices vary.\n\n"
      "Nothing else matters here.\n\n"
      "The harbor is old. Ships dock at night.";
  return p;
}

TEST(Compress, NoOpReturnsInputVerbatim) {
  const Prompt p = paragraphs_prompt();
  CompressionConfig cfg;
  cfg.target_tokens = 1000;
  const CompressionResult r = compress(p, cfg, LexicalScorer(), kCounter);
  EXPECT_TRUE(r.noop);
  EXPECT_EQ(r.compressed_context, p.context);
  EXPECT_EQ(r.compressed_tokens, r.original_tokens);
  EXPECT_EQ(r.plan.e_comp, 0);
  EXPECT_EQ(r.kept_chunks.size(), 4u);
  EXPECT_TRUE(r.dropped_chunks.empty());
}

TEST(Compress, AccountingAndBounds) {
  const Prompt p = paragraphs_prompt();
  CompressionConfig cfg;
  cfg.target_tokens = 20;
  const CompressionResult r =
      compress(p, cfg, FixedScorer({0.9, 0.2, 0.1, 0.5}), kCounter);
  EXPECT_EQ(r.original_tokens, 3 + 2 + 29);
  EXPECT_EQ(r.plan.e_comp, 14);
  EXPECT_EQ(r.plan.e_chunk, 11);
  EXPECT_EQ(r.plan.e_sent, 3);
  // Sorted chunk sizes [8 (c0), 8 (c3), 9 (c1), 4 (c2)]; suffix sums
  // 29, 21, 13, 4 -> the first that fits 11 is [4]: drop chunk 2 only.
  EXPECT_EQ(r.dropped_chunks, (std::vector<std::size_t>{2}));
  EXPECT_EQ(r.removed_chunk_tokens, 4);
  EXPECT_EQ(r.compressed_tokens,
            r.original_tokens - r.removed_chunk_tokens - r.removed_sentence_tokens);
  EXPECT_GE(r.compressed_tokens, cfg.target_tokens);
  EXPECT_EQ(r.rejoined_tokens, 5 + kCounter.count(r.compressed_context));
}

TEST(Compress, ChunkOnlyKeepsIntactPrefix) {
  const Prompt p = paragraphs_prompt();
  CompressionConfig cfg;
  cfg.target_tokens = 20;
  cfg.rho = 1.0;
  const CompressionResult r =
      compress(p, cfg, FixedScorer({0.9, 0.2, 0.1, 0.5}), kCounter);
  EXPECT_EQ(r.removed_sentence_tokens, 0);
  // Suffix sums 29, 21, 13 -> 13 fits 14: keep chunks 0 and 3.
  EXPECT_EQ(r.compressed_context,
            "The river bends twice. It floods in spring.\n"
            "The harbor is old. Ships dock at night.");
}

TEST(Compress, SentenceOnlyDropsNoChunk) {
  const Prompt p = paragraphs_prompt();
  CompressionConfig cfg;
  cfg.target_tokens = 20;
  cfg.rho = 0.0;
  const CompressionResult r =
      compress(p, cfg, FixedScorer({0.9, 0.2, 0.1, 0.5}), kCounter);
  EXPECT_TRUE(r.dropped_chunks.empty());
  EXPECT_EQ(r.removed_chunk_tokens, 0);
  EXPECT_LE(r.removed_sentence_tokens, 14);
}

TEST(Compress, SortedOrderingEmitsByScore) {
  const Prompt p = paragraphs_prompt();
  CompressionConfig cfg;
  cfg.target_tokens = 20;
  cfg.rho = 1.0;
  cfg.ordering = Ordering::kSorted;
  const CompressionResult r =
      compress(p, cfg, FixedScorer({0.2, 0.2, 0.1, 0.9}), kCounter);
  ASSERT_FALSE(r.kept_chunks.empty());
  EXPECT_EQ(r.kept_chunks.front().index_original, 3u);
  EXPECT_TRUE(r.compressed_context.starts_with("The harbor is old."));
}

TEST(Compress, EverythingRemovable) {
  Prompt p;
  p.context = "One two. Three four.\n\nFive six.";
  CompressionConfig cfg;
  cfg.target_tokens = 0;
  cfg.rho = 1.0;
  const CompressionResult r = compress(p, cfg, UniformScorer(), kCounter);
  EXPECT_TRUE(r.all_chunks_dropped);
  EXPECT_TRUE(r.empty_output);
  EXPECT_EQ(r.compressed_context, "");
  EXPECT_EQ(r.compressed_tokens, 0);
}

TEST(Compress, InvalidConfigThrows) {
  CompressionConfig cfg;
  cfg.rho = 1.5;
  EXPECT_THROW(compress(paragraphs_prompt(), cfg, UniformScorer(), kCounter),
               ConfigError);
  cfg = {};
  cfg.gamma = -1;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = {};
  cfg.target_tokens = -5;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = {};
  cfg.max_chunk_tokens = 0;
  EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(Compress, ScorerErrorsPropagate) {
  class Short final : public Scorer {
   public:
    std::string name() const override { return "short"; }
    ScoreResponse score(const ScoreRequest&) const override { return {}; }
  };
  CompressionConfig cfg;
  cfg.target_tokens = 5;
  EXPECT_THROW(compress(paragraphs_prompt(), cfg, Short(), kCounter),
               ProtocolError);
}

TEST(Compress, SlackRolloverMovesUnusedChunkBudget) {
  testing::Rng rng(5);
  Prompt p;
  p.context = testing::make_prose(rng, 3000);
  CompressionConfig cfg;
  cfg.target_tokens = 800;
  const CompressionResult plain = compress(p, cfg, UniformScorer(), kCounter);
  cfg.slack_rollover = true;
  const CompressionResult rolled = compress(p, cfg, UniformScorer(), kCounter);
  EXPECT_EQ(rolled.removed_chunk_tokens, plain.removed_chunk_tokens);
  EXPECT_EQ(rolled.plan.e_chunk, rolled.removed_chunk_tokens);
  EXPECT_EQ(rolled.plan.e_chunk + rolled.plan.e_sent, rolled.plan.e_comp);
  EXPECT_LE(rolled.compressed_tokens, plain.compressed_tokens);
  EXPECT_GE(rolled.compressed_tokens, cfg.target_tokens);
}

TEST(Compressor, BundlesCollaborators) {
  CompressionConfig cfg;
  cfg.target_tokens = 20;
  const Compressor c(cfg, std::make_shared<UniformScorer>(),
                     std::make_shared<WhitespaceCounter>());
  const CompressionResult a = c(paragraphs_prompt());
  const CompressionResult b =
      compress(paragraphs_prompt(), cfg, UniformScorer(), kCounter);
  EXPECT_EQ(a.compressed_context, b.compressed_context);
  EXPECT_THROW(Compressor(cfg, nullptr, std::make_shared<WhitespaceCounter>()),
               ConfigError);
}

}  // namespace
}  // namespace r2c
