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

#include "r2c/segmenter.hpp"

#include <algorithm>
#include <cctype>

#include "r2c/error.hpp"

namespace r2c {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool is_blank(std::string_view line) { return trim(line).empty(); }

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    lines.push_back(text.substr(start, end - start));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return lines;
}

// Blank-line separated paragraphs, each trimmed.
std::vector<std::string_view> split_paragraphs(std::string_view text) {
  std::vector<std::string_view> paragraphs;
  std::size_t para_start = std::string_view::npos;
  std::size_t para_end = 0;
  std::size_t offset = 0;
  for (std::string_view line : split_lines(text)) {
    if (is_blank(line)) {
      if (para_start != std::string_view::npos) {
        paragraphs.push_back(trim(text.substr(para_start, para_end - para_start)));
        para_start = std::string_view::npos;
      }
    } else {
      if (para_start == std::string_view::npos) para_start = offset;
      para_end = offset + line.size();
    }
    offset += line.size() + 1;
  }
  if (para_start != std::string_view::npos) {
    paragraphs.push_back(trim(text.substr(para_start, para_end - para_start)));
  }
  return paragraphs;
}

class ChunkBuilder {
 public:
  ChunkBuilder(const CompressionConfig& config, const TokenCounter& counter)
      : cap_(config.max_chunk_tokens), counter_(counter) {}

  void add_unit(std::string_view unit) {
    unit = trim(unit);
    if (unit.empty()) return;
    const TokenCount n = counter_.count(unit);
    if (n <= cap_) {
      emit(std::string(unit), n, false);
      return;
    }
    pack_lines(unit);
  }

  std::vector<Chunk> take() { return std::move(chunks_); }

 private:
  void emit(std::string text, TokenCount tokens, bool hard_split) {
    Chunk chunk;
    chunk.index_original = chunks_.size();
    chunk.text = std::move(text);
    chunk.token_count = tokens;
    chunk.hard_split = hard_split;
    chunks_.push_back(std::move(chunk));
  }

  void pack_lines(std::string_view unit) {
    std::string current;
    TokenCount current_tokens = 0;
    const auto flush = [&] {
      if (!current.empty()) emit(std::move(current), current_tokens, false);
      current.clear();
      current_tokens = 0;
    };
    for (std::string_view raw : split_lines(unit)) {
      const std::string_view line = trim(raw);
      if (line.empty()) continue;
      const TokenCount line_tokens = counter_.count(line);
      if (line_tokens > cap_) {
        flush();
        hard_split(line);
        continue;
      }
      if (current.empty()) {
        current = std::string(line);
        current_tokens = line_tokens;
        continue;
      }
      std::string candidate = current + "\n" + std::string(line);
      const TokenCount candidate_tokens = counter_.count(candidate);
      if (candidate_tokens <= cap_) {
        current = std::move(candidate);
        current_tokens = candidate_tokens;
      } else {
        flush();
        current = std::string(line);
        current_tokens = line_tokens;
      }
    }
    flush();
  }

  void hard_split(std::string_view line) {
    const std::vector<CharSpan> tokens = counter_.tokenize(line);
    std::size_t a = 0;
    while (a < tokens.size()) {
      std::size_t b = std::min(tokens.size(), a + static_cast<std::size_t>(cap_));
      for (;;) {
        const std::string_view piece = trim(
            line.substr(tokens[a].start, tokens[b - 1].end - tokens[a].start));
        const TokenCount n = counter_.count(piece);
        // Re-tokenizing a cut piece can differ slightly for subword
        // counters; shrink until it fits.
        if (n <= cap_ || b == a + 1) {
          if (!piece.empty()) emit(std::string(piece), n, true);
          break;
        }
        --b;
      }
      a = b;
    }
  }

  TokenCount cap_;
  const TokenCounter& counter_;
  std::vector<Chunk> chunks_;
};

}  // namespace

std::vector<Sentence> split_sentences(const Chunk& chunk,
                                      const TokenCounter& counter,
                                      const SentenceSplitter& splitter) {
  const std::string_view text = chunk.text;
  std::vector<CharSpan> extents = splitter.split(text);
  if (extents.empty()) extents.push_back({0, text.size()});

  std::vector<CharSpan> tiles(extents.size());
  for (std::size_t m = 0; m < extents.size(); ++m) {
    tiles[m].start = m == 0 ? 0 : extents[m].start;
    tiles[m].end = m + 1 < extents.size() ? extents[m + 1].start : text.size();
  }
  const std::vector<TokenCount> counts =
      count_tokens_by_span(counter.tokenize(text), tiles);

  std::vector<Sentence> sentences(extents.size());
  for (std::size_t m = 0; m < extents.size(); ++m) {
    Sentence& s = sentences[m];
    s.index_in_chunk = m;
    s.text = std::string(text.substr(extents[m].start, extents[m].size()));
    s.char_span = tiles[m];
    s.token_count = counts[m];
  }
  return sentences;
}

std::vector<Chunk> segment_context(std::string_view context,
                                   std::span<const std::string> unit_hints,
                                   const CompressionConfig& config,
                                   const TokenCounter& counter,
                                   const SentenceSplitter& splitter) {
  ChunkBuilder builder(config, counter);
  if (!unit_hints.empty()) {
    for (const std::string& unit : unit_hints) builder.add_unit(unit);
  } else {
    for (std::string_view paragraph : split_paragraphs(context)) {
      builder.add_unit(paragraph);
    }
  }
  std::vector<Chunk> chunks = builder.take();
  if (chunks.empty()) {
    throw ValidationError("cannot segment an empty context");
  }
  for (Chunk& chunk : chunks) {
    chunk.sentences = split_sentences(chunk, counter, splitter);
  }
  return chunks;
}

std::string join_chunks(std::span<const Chunk> chunks) {
  std::string out;
  for (const Chunk& chunk : chunks) {
    if (!out.empty()) out += "\n\n";
    out += chunk.text;
  }
  return out;
}

}  // namespace r2c
