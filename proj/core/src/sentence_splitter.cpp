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

#include "r2c/sentence_splitter.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace r2c {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

// Length of a closing quote/bracket at `pos`, 0 if none.
std::size_t closer_length(std::string_view text, std::size_t pos) {
  const char c = text[pos];
  if (c == '"' || c == '\'' || c == ')' || c == ']' || c == '}') return 1;
  // U+201D and U+2019.
  if (text.substr(pos, 3) == "\xE2\x80\x9D" ||
      text.substr(pos, 3) == "\xE2\x80\x99") {
    return 3;
  }
  return 0;
}

std::size_t skip_space(std::string_view text, std::size_t pos) {
  while (pos < text.size() && is_space(text[pos])) ++pos;
  return pos;
}

}  // namespace

RuleBasedSentenceSplitter::RuleBasedSentenceSplitter()
    : abbreviations_(default_abbreviations()) {}

RuleBasedSentenceSplitter::RuleBasedSentenceSplitter(
    std::set<std::string, std::less<>> abbreviations)
    : abbreviations_(std::move(abbreviations)) {}

const std::set<std::string, std::less<>>&
RuleBasedSentenceSplitter::default_abbreviations() {
  static const std::set<std::string, std::less<>> kAbbreviations = {
      "mr",   "mrs", "ms",  "dr",  "prof", "sr",  "jr",  "st",  "vs",
      "mt",   "ft",  "jan", "feb", "mar",  "apr", "jun", "jul", "aug",
      "sep",  "sept", "oct", "nov", "dec", "e.g", "i.e", "u.s", "u.k",
      "u.n",  "inc", "ltd", "co",  "corp", "vol", "pp",  "fig", "al",
      "gen",  "col", "lt",  "sgt", "capt", "rev", "hon", "gov", "sen",
      "rep",  "approx", "dept", "est", "cf"};
  return kAbbreviations;
}

bool RuleBasedSentenceSplitter::ends_sentence(std::string_view text,
                                              std::size_t sentence_start,
                                              std::size_t run_start,
                                              std::size_t run_end,
                                              std::size_t after) const {
  const std::size_t run_length = run_end - run_start;
  if (run_length == 1 && text[run_start] == '.') {
    std::size_t word_start = run_start;
    while (word_start > sentence_start && !is_space(text[word_start - 1])) {
      --word_start;
    }
    while (word_start < run_start &&
           (text[word_start] == '(' || text[word_start] == '"' ||
            text[word_start] == '\'' || text[word_start] == '[')) {
      ++word_start;
    }
    std::string word(text.substr(word_start, run_start - word_start));
    for (char& c : word) {
      c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (abbreviations_.contains(word)) return false;
  }
  if (run_length >= 3 && text.substr(run_start, 3) == "...") {
    const std::size_t next = skip_space(text, after);
    if (next < text.size() &&
        std::islower(static_cast<unsigned char>(text[next]))) {
      return false;
    }
  }
  return true;
}

std::vector<CharSpan> RuleBasedSentenceSplitter::split(
    std::string_view text) const {
  std::vector<CharSpan> extents;
  std::size_t start = skip_space(text, 0);
  std::size_t i = start;
  while (i < text.size()) {
    if (!is_terminal(text[i])) {
      ++i;
      continue;
    }
    std::size_t run_end = i;
    while (run_end < text.size() && is_terminal(text[run_end])) ++run_end;
    std::size_t after = run_end;
    while (after < text.size()) {
      const std::size_t n = closer_length(text, after);
      if (n == 0) break;
      after += n;
    }
    if ((after == text.size() || is_space(text[after])) &&
        ends_sentence(text, start, i, run_end, after)) {
      extents.push_back({start, after});
      start = skip_space(text, after);
    }
    i = std::max(after, i + 1);
  }
  if (start < text.size()) {
    std::size_t end = text.size();
    while (end > start && is_space(text[end - 1])) --end;
    extents.push_back({start, end});
  }
  return extents;
}

const SentenceSplitter& default_sentence_splitter() {
  static const RuleBasedSentenceSplitter kSplitter;
  return kSplitter;
}

}  // namespace r2c
