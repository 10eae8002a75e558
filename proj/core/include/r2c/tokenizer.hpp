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
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "r2c/types.hpp"

namespace r2c {

// Counting tokenizer used for every budget and reported token count.
// Implementations are immutable after construction and safe to share
// between threads.
class TokenCounter {
 public:
  virtual ~TokenCounter() = default;

  // Stable identifier recorded in reports ("whitespace", "bpe:<file>").
  virtual std::string name() const = 0;

  // Byte ranges of the tokens of `text`, in order and non-overlapping.
  virtual std::vector<CharSpan> tokenize(std::string_view text) const = 0;

  virtual TokenCount count(std::string_view text) const {
    return static_cast<TokenCount>(tokenize(text).size());
  }
};

// Maximal runs of non-whitespace bytes.
class WhitespaceCounter final : public TokenCounter {
 public:
  std::string name() const override { return "whitespace"; }
  std::vector<CharSpan> tokenize(std::string_view text) const override;
  TokenCount count(std::string_view text) const override;
};

// Byte-level byte-pair-encoding counter. Text is first cut into pieces
// (letter, digit, and punctuation runs with an optional leading space, plus
// whitespace runs); each piece is then merged greedily by merge rank.
//
// Merge files are plain text: an optional "#version" line followed by one
// merge per line, "<left> <right>", in rank order. Tokens use the escapes
// \s (space), \n, \t, \r, \\ and \xHH for other non-printable bytes.
class BpeCounter final : public TokenCounter {
 public:
  using Merge = std::pair<std::string, std::string>;

  explicit BpeCounter(std::span<const Merge> merges,
                      std::string label = "bpe");

  // Throws ConfigError when the file is missing or malformed.
  static BpeCounter from_file(const std::filesystem::path& path);

  std::string name() const override { return label_; }
  std::vector<CharSpan> tokenize(std::string_view text) const override;

  std::size_t merge_count() const noexcept { return merge_count_; }

 private:
  struct MergeRule {
    std::uint32_t rank;
    std::uint32_t merged_id;
  };

  std::uint32_t intern(const std::string& token);
  void encode_piece(std::string_view text, std::size_t offset,
                    std::vector<CharSpan>& out) const;

  std::string label_;
  std::unordered_map<std::string, std::uint32_t> ids_;
  std::unordered_map<std::uint64_t, MergeRule> rules_;
  std::size_t merge_count_ = 0;
};

// Splits text into the pieces a BpeCounter merges within.
std::vector<CharSpan> pretokenize(std::string_view text);

// Escape/unescape one merge-file token.
std::string escape_bpe_token(std::string_view raw);
std::string unescape_bpe_token(std::string_view escaped);

// Resolves "whitespace" or "bpe:<path>" to a counter. Throws ConfigError for
// unknown names.
std::shared_ptr<const TokenCounter> make_token_counter(std::string_view spec);

inline TokenCount count_tokens(std::string_view text,
                               const TokenCounter& counter) {
  return counter.count(text);
}

// Number of `tokens` whose first byte falls inside each of `spans`. Tokens
// starting outside every span are ignored. `spans` must be sorted and
// non-overlapping.
std::vector<TokenCount> count_tokens_by_span(std::span<const CharSpan> tokens,
                                             std::span<const CharSpan> spans);

}  // namespace r2c
