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

#include <span>
#include <vector>

#include "r2c/types.hpp"

namespace r2c {

// Pools a list of token scores; an empty list pools to 0.
double pool_scores(std::span<const double> scores, Pooling pooling);

// Fills Chunk::score from the chunk's spans (mean by default, i.e. the
// average token score over the chunk's context tokens). `spans` must be
// aligned with `chunks`; throws ValidationError otherwise.
void aggregate_chunk_scores(std::span<Chunk> chunks,
                            std::span<const std::vector<ScoredSpan>> spans,
                            Pooling pooling);

// Fills Sentence::score for one chunk. Each span belongs to the sentence
// whose tiling span contains its first byte. Throws ValidationError for spans
// outside the chunk text.
void aggregate_sentence_scores(Chunk& chunk, std::span<const ScoredSpan> spans,
                               Pooling pooling);

// Positions of `scores` ordered by descending score; equal scores keep
// ascending position.
std::vector<std::size_t> sort_by_importance(std::span<const double> scores);

std::vector<std::size_t> sort_chunks_by_importance(std::span<const Chunk> chunks);
std::vector<std::size_t> sort_sentences_by_importance(
    std::span<const Sentence> sentences);

}  // namespace r2c
