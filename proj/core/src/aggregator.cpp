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

#include "r2c/aggregator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "r2c/error.hpp"

namespace r2c {

double pool_scores(std::span<const double> scores, Pooling pooling) {
  if (scores.empty()) return 0.0;
  switch (pooling) {
    case Pooling::kMax:
      return *std::max_element(scores.begin(), scores.end());
    case Pooling::kSum:
      return std::accumulate(scores.begin(), scores.end(), 0.0);
    case Pooling::kMean:
      break;
  }
  return std::accumulate(scores.begin(), scores.end(), 0.0) /
         static_cast<double>(scores.size());
}

void aggregate_chunk_scores(std::span<Chunk> chunks,
                            std::span<const std::vector<ScoredSpan>> spans,
                            Pooling pooling) {
  if (chunks.size() != spans.size()) {
    throw ValidationError("span lists (" + std::to_string(spans.size()) +
                          ") are not aligned with chunks (" +
                          std::to_string(chunks.size()) + ")");
  }
  std::vector<double> values;
  for (std::size_t i = 0; i < chunks.size(); ++i) {
    values.clear();
    for (const ScoredSpan& s : spans[i]) {
      if (s.char_end > chunks[i].text.size()) {
        throw ValidationError("span ends past chunk " + std::to_string(i));
      }
      values.push_back(s.score);
    }
    chunks[i].score = pool_scores(values, pooling);
  }
}

void aggregate_sentence_scores(Chunk& chunk, std::span<const ScoredSpan> spans,
                               Pooling pooling) {
  std::vector<std::vector<double>> per_sentence(chunk.sentences.size());
  for (const ScoredSpan& s : spans) {
    if (s.char_start >= s.char_end || s.char_end > chunk.text.size()) {
      throw ValidationError(
          "span [" + std::to_string(s.char_start) + ", " +
          std::to_string(s.char_end) + ") lies outside chunk " +
          std::to_string(chunk.index_original));
    }
    const auto it = std::upper_bound(
        chunk.sentences.begin(), chunk.sentences.end(), s.char_start,
        [](std::size_t pos, const Sentence& sent) {
          return pos < sent.char_span.start;
        });
    if (it == chunk.sentences.begin()) continue;
    const auto m = static_cast<std::size_t>(it - chunk.sentences.begin()) - 1;
    if (chunk.sentences[m].char_span.contains(s.char_start)) {
      per_sentence[m].push_back(s.score);
    }
  }
  for (std::size_t m = 0; m < chunk.sentences.size(); ++m) {
    chunk.sentences[m].score = pool_scores(per_sentence[m], pooling);
  }
}

std::vector<std::size_t> sort_by_importance(std::span<const double> scores) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return scores[a] > scores[b];
                   });
  return order;
}

std::vector<std::size_t> sort_chunks_by_importance(
    std::span<const Chunk> chunks) {
  std::vector<double> scores;
  scores.reserve(chunks.size());
  for (const Chunk& c : chunks) scores.push_back(c.score);
  return sort_by_importance(scores);
}

std::vector<std::size_t> sort_sentences_by_importance(
    std::span<const Sentence> sentences) {
  std::vector<double> scores;
  scores.reserve(sentences.size());
  for (const Sentence& s : sentences) scores.push_back(s.score);
  return sort_by_importance(scores);
}

}  // namespace r2c
