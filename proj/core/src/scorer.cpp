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

#include "r2c/scorer.hpp"

#include <cctype>
#include <cmath>
#include <unordered_set>

#include "r2c/error.hpp"
#include "r2c/tokenizer.hpp"

namespace r2c {
namespace {

std::vector<ScoredSpan> word_spans(std::string_view text) {
  static const WhitespaceCounter kWords;
  std::vector<ScoredSpan> spans;
  for (const CharSpan& w : kWords.tokenize(text)) {
    spans.push_back({w.start, w.end, 0.0});
  }
  return spans;
}

}  // namespace

std::string normalize_word(std::string_view word) {
  const auto punct = [](char c) {
    return std::ispunct(static_cast<unsigned char>(c)) != 0;
  };
  while (!word.empty() && punct(word.front())) word.remove_prefix(1);
  while (!word.empty() && punct(word.back())) word.remove_suffix(1);
  std::string out(word);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

ScoreResponse UniformScorer::score(const ScoreRequest& request) const {
  validate_request(request);
  ScoreResponse response;
  response.per_chunk.reserve(request.chunks.size());
  for (const std::string& chunk : request.chunks) {
    auto spans = word_spans(chunk);
    for (ScoredSpan& s : spans) s.score = 1.0;
    response.per_chunk.push_back(std::move(spans));
  }
  response.backend_meta["backend"] = name();
  return response;
}

ScoreResponse LexicalScorer::score(const ScoreRequest& request) const {
  validate_request(request);
  std::unordered_set<std::string> query;
  for (const ScoredSpan& w : word_spans(request.question)) {
    std::string norm = normalize_word(
        std::string_view(request.question).substr(w.char_start,
                                                  w.char_end - w.char_start));
    if (!norm.empty()) query.insert(std::move(norm));
  }
  ScoreResponse response;
  response.per_chunk.reserve(request.chunks.size());
  for (const std::string& chunk : request.chunks) {
    auto spans = word_spans(chunk);
    for (ScoredSpan& s : spans) {
      const std::string norm = normalize_word(
          std::string_view(chunk).substr(s.char_start,
                                         s.char_end - s.char_start));
      s.score = query.contains(norm) ? 1.0 : 0.0;
    }
    response.per_chunk.push_back(std::move(spans));
  }
  response.backend_meta["backend"] = name();
  response.backend_meta["query_terms"] = std::to_string(query.size());
  return response;
}

void validate_request(const ScoreRequest& request) {
  if (request.chunks.empty()) {
    throw ValidationError("score request has no chunks");
  }
  for (std::size_t i = 0; i < request.chunks.size(); ++i) {
    if (request.chunks[i].empty()) {
      throw ValidationError("score request chunk " + std::to_string(i) +
                            " is empty");
    }
  }
}

void validate_response(const ScoreRequest& request,
                       const ScoreResponse& response) {
  if (response.per_chunk.size() != request.chunks.size()) {
    throw ProtocolError("score response has " +
                        std::to_string(response.per_chunk.size()) +
                        " chunk(s), request had " +
                        std::to_string(request.chunks.size()));
  }
  for (std::size_t i = 0; i < request.chunks.size(); ++i) {
    const std::size_t limit = request.chunks[i].size();
    std::size_t prev_end = 0;
    for (const ScoredSpan& s : response.per_chunk[i]) {
      const std::string where = "chunk " + std::to_string(i) + " span [" +
                                std::to_string(s.char_start) + ", " +
                                std::to_string(s.char_end) + ")";
      if (!std::isfinite(s.score) || s.score < 0.0) {
        throw ValidationError(where + " has invalid score " +
                              std::to_string(s.score));
      }
      if (s.char_start >= s.char_end || s.char_end > limit) {
        throw ValidationError(where + " lies outside the chunk (size " +
                              std::to_string(limit) + ")");
      }
      if (s.char_start < prev_end) {
        throw ValidationError(where + " overlaps or precedes its predecessor");
      }
      prev_end = s.char_end;
    }
  }
}

}  // namespace r2c
