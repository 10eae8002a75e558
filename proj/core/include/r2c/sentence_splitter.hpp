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

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "r2c/types.hpp"

namespace r2c {

// Finds sentence extents in a piece of text. Implementations return the
// trimmed extent of every sentence, in order and non-overlapping. A text with
// no boundary yields a single extent.
class SentenceSplitter {
 public:
  virtual ~SentenceSplitter() = default;
  virtual std::string name() const = 0;
  virtual std::vector<CharSpan> split(std::string_view text) const = 0;
};

// Punctuation-driven splitter tuned to agree with the common Punkt-style
// English splitter on ordinary prose:
//  - a run of . ! ? (plus closing quotes/brackets) followed by whitespace or
//    end of text ends a sentence;
//  - a single period after a known abbreviation ("Mr.", "e.g.") does not;
//  - an ellipsis followed by a lowercase word does not.
class RuleBasedSentenceSplitter final : public SentenceSplitter {
 public:
  RuleBasedSentenceSplitter();
  explicit RuleBasedSentenceSplitter(std::set<std::string, std::less<>> abbreviations);

  std::string name() const override { return "rule-based"; }
  std::vector<CharSpan> split(std::string_view text) const override;

  static const std::set<std::string, std::less<>>& default_abbreviations();

 private:
  bool ends_sentence(std::string_view text, std::size_t sentence_start,
                     std::size_t run_start, std::size_t run_end,
                     std::size_t after) const;

  std::set<std::string, std::less<>> abbreviations_;
};

const SentenceSplitter& default_sentence_splitter();

}  // namespace r2c
