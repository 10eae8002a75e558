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

#include "r2c/tokenizer.hpp"

#include <algorithm>
#include <cctype>

#include "r2c/error.hpp"

namespace r2c {
namespace {

bool is_space(unsigned char c) { return std::isspace(c) != 0; }

}  // namespace

std::vector<CharSpan> WhitespaceCounter::tokenize(std::string_view text) const {
  std::vector<CharSpan> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i == text.size()) break;
    const std::size_t start = i;
    while (i < text.size() && !is_space(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    tokens.push_back({start, i});
  }
  return tokens;
}

TokenCount WhitespaceCounter::count(std::string_view text) const {
  TokenCount n = 0;
  bool in_token = false;
  for (char ch : text) {
    const bool space = is_space(static_cast<unsigned char>(ch));
    if (!space && !in_token) ++n;
    in_token = !space;
  }
  return n;
}

std::shared_ptr<const TokenCounter> make_token_counter(std::string_view spec) {
  if (spec == "whitespace" || spec == "ws") {
    return std::make_shared<WhitespaceCounter>();
  }
  constexpr std::string_view kBpe = "bpe:";
  if (spec.substr(0, kBpe.size()) == kBpe && spec.size() > kBpe.size()) {
    return std::make_shared<BpeCounter>(
        BpeCounter::from_file(std::string(spec.substr(kBpe.size()))));
  }
  throw ConfigError("unknown tokenizer '" + std::string(spec) +
                    "' (expected whitespace or bpe:<merges file>)");
}

std::vector<TokenCount> count_tokens_by_span(std::span<const CharSpan> tokens,
                                             std::span<const CharSpan> spans) {
  std::vector<TokenCount> counts(spans.size(), 0);
  std::size_t s = 0;
  for (const CharSpan& token : tokens) {
    while (s < spans.size() && spans[s].end <= token.start) ++s;
    if (s == spans.size()) break;
    if (spans[s].contains(token.start)) ++counts[s];
  }
  return counts;
}

}  // namespace r2c
