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
#include <string>
#include <string_view>
#include <vector>

#include "r2c/sentence_splitter.hpp"
#include "r2c/tokenizer.hpp"
#include "r2c/types.hpp"

namespace r2c {

// Cuts a context into chunks of at most `config.max_chunk_tokens` tokens and
// splits every chunk into sentences (scores left at 0).
//
// Units are the caller's `unit_hints` when given, otherwise blank-line
// separated paragraphs. A unit that fits the cap becomes one chunk; a longer
// unit is split at line breaks and its lines are packed greedily. A single
// line longer than the cap is cut at token boundaries and the resulting
// chunks carry `hard_split`.
//
// Throws ValidationError when the context (or every hint) is empty.
std::vector<Chunk> segment_context(
    std::string_view context, std::span<const std::string> unit_hints,
    const CompressionConfig& config, const TokenCounter& counter,
    const SentenceSplitter& splitter = default_sentence_splitter());

// Splits one chunk into tiling sentences. Token counts are taken from a
// single tokenization of the chunk, each token going to the sentence that
// holds its first byte, so they always sum to the chunk's count.
std::vector<Sentence> split_sentences(
    const Chunk& chunk, const TokenCounter& counter,
    const SentenceSplitter& splitter = default_sentence_splitter());

// Canonical text for a chunk list (blank line between chunks). Segmenting
// the result without hints reproduces the same chunk texts.
std::string join_chunks(std::span<const Chunk> chunks);

}  // namespace r2c
