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

#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "r2c/error.hpp"
#include "r2c/tokenizer.hpp"

namespace r2c {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const std::string kMerges = std::string(R2C_SOURCE_DIR) + "/data/bpe/merges.txt";

TEST(WhitespaceCounter, EmptyIsZero) {
  EXPECT_EQ(WhitespaceCounter().count(""), 0);
  EXPECT_EQ(WhitespaceCounter().count(" \n\t "), 0);
}

TEST(WhitespaceCounter, CountsRuns) {
  const WhitespaceCounter c;
  EXPECT_EQ(c.count("a b c"), 3);
  EXPECT_EQ(c.count("  leading and   trailing  "), 3);
  const std::vector<CharSpan> spans = c.tokenize(" ab  c");
  ASSERT_EQ(spans.size(), 2u);
  EXPECT_EQ(spans[0], (CharSpan{1, 3}));
  EXPECT_EQ(spans[1], (CharSpan{5, 6}));
}

TEST(Pretokenize, AttachesSingleSpaceToNextWord) {
  const std::string text = "Hi  there, 42x";
  std::vector<std::string> pieces;
  for (const CharSpan& p : pretokenize(text)) {
    pieces.push_back(text.substr(p.start, p.size()));
  }
  EXPECT_EQ(pieces, (std::vector<std::string>{"Hi", " ", " there", ",", " 42",
                                              "x"}));
}

TEST(Pretokenize, TilesInput) {
  const std::string text = "  a\n\nb. c!?  \t";
  std::size_t pos = 0;
  for (const CharSpan& p : pretokenize(text)) {
    EXPECT_EQ(p.start, pos);
    EXPECT_GT(p.end, p.start);
    pos = p.end;
  }
  EXPECT_EQ(pos, text.size());
}

TEST(BpeEscape, RoundTripsEveryByte) {
  std::string all;
  for (int b = 0; b < 256; ++b) all += static_cast<char>(b);
  const std::string escaped = escape_bpe_token(all);
  EXPECT_EQ(escaped.find(' '), std::string::npos);
  EXPECT_EQ(unescape_bpe_token(escaped), all);
}

TEST(BpeEscape, RejectsBadEscapes) {
  EXPECT_THROW(unescape_bpe_token("ab\\"), ConfigError);
  EXPECT_THROW(unescape_bpe_token("\\q"), ConfigError);
  EXPECT_THROW(unescape_bpe_token("\\xZ1"), ConfigError);
}

TEST(BpeCounter, NoMergesIsOneTokenPerByte) {
  const BpeCounter c(std::span<const BpeCounter::Merge>{});
  EXPECT_EQ(c.count("abc d"), 5);
  EXPECT_EQ(c.count(""), 0);
}

TEST(BpeCounter, AppliesMergesByRank) {
  const std::vector<BpeCounter::Merge> merges = {
      {"a", "b"}, {"b", "c"}, {"ab", "c"}};
  const BpeCounter c(merges);
  // "ab" (rank 0) wins over "bc" (rank 1), then "ab"+"c".
  const std::vector<CharSpan> spans = c.tokenize("abc");
  ASSERT_EQ(spans.size(), 1u);
  EXPECT_EQ(spans[0], (CharSpan{0, 3}));
  EXPECT_EQ(c.count("abab"), 2);
  EXPECT_EQ(c.count("bcbc"), 2);
}

TEST(BpeCounter, MergesNeverCrossPieces) {
  const std::vector<BpeCounter::Merge> merges = {{"a", " "}, {"a", "b"}};
  const BpeCounter c(merges);
  // "a " cannot merge: the space belongs to the next piece.
  EXPECT_EQ(c.count("a b"), 3);
}

TEST(BpeCounter, TokensTileText) {
  const BpeCounter c = BpeCounter::from_file(kMerges);
  const std::string text = "Licensed under the Apache License, Version 2.0.\n";
  std::size_t pos = 0;
  for (const CharSpan& t : c.tokenize(text)) {
    EXPECT_EQ(t.start, pos);
    pos = t.end;
  }
  EXPECT_EQ(pos, text.size());
  EXPECT_LT(c.count(text), static_cast<TokenCount>(text.size()) / 2);
}

TEST(BpeCounter, GoldenSample) {
  const BpeCounter c = BpeCounter::from_file(kMerges);
  EXPECT_EQ(c.merge_count(), 2000u);
  const std::string sample =
      read_file(std::string(R2C_SOURCE_DIR) + "/tests/golden/bpe_sample.txt");
  const long expected = std::stol(
      read_file(std::string(R2C_SOURCE_DIR) + "/tests/golden/bpe_sample.count"));
  EXPECT_GE(sample.size(), 1000u);
  EXPECT_EQ(c.count(sample), expected);
}

TEST(BpeCounter, MissingFileIsConfigError) {
  EXPECT_THROW(BpeCounter::from_file("/nonexistent/merges.txt"), ConfigError);
}

TEST(BpeCounter, MalformedLineIsConfigError) {
  const std::string path = ::testing::TempDir() + "bad_merges.txt";
  std::ofstream(path) << "a b\nonlyone\n";
  EXPECT_THROW(BpeCounter::from_file(path), ConfigError);
}

TEST(BpeCounter, ConcurrentUseAgrees) {
  const BpeCounter c = BpeCounter::from_file(kMerges);
  const std::string text =
      read_file(std::string(R2C_SOURCE_DIR) + "/tests/golden/bpe_sample.txt");
  const TokenCount expected = c.count(text);
  std::vector<TokenCount> got(4);
  {
    std::vector<std::jthread> threads;
    for (std::size_t t = 0; t < got.size(); ++t) {
      threads.emplace_back([&, t] { got[t] = c.count(text); });
    }
  }
  for (TokenCount g : got) EXPECT_EQ(g, expected);
}

TEST(MakeTokenCounter, ResolvesNames) {
  EXPECT_EQ(make_token_counter("whitespace")->name(), "whitespace");
  const auto bpe = make_token_counter("bpe:" + kMerges);
  EXPECT_EQ(bpe->name(), "bpe:merges.txt");
  EXPECT_EQ(bpe->count("a b c"), BpeCounter::from_file(kMerges).count("a b c"));
  EXPECT_THROW(make_token_counter("sentencepiece"), ConfigError);
}

TEST(CountTokensBySpan, AssignsByFirstByte) {
  const std::vector<CharSpan> tokens = {{0, 3}, {3, 6}, {6, 9}};
  const std::vector<CharSpan> spans = {{0, 4}, {4, 9}};
  EXPECT_EQ(count_tokens_by_span(tokens, spans),
            (std::vector<TokenCount>{2, 1}));
}

}  // namespace
}  // namespace r2c
