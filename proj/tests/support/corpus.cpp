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

#include "support/corpus.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string_view>

#include <nlohmann/json.hpp>

#include "r2c/error.hpp"

namespace r2c::testing {
namespace {

constexpr std::array<std::string_view, 48> kWords = {
    "river",   "stone",   "market", "signal",  "harbor", "lantern",
    "orbit",   "quiet",   "copper", "meadow",  "engine", "winter",
    "garden",  "violet",  "thunder", "paper",  "island", "canyon",
    "silver",  "morning", "bridge", "forest",  "amber",  "crystal",
    "distant", "golden",  "hollow", "journey", "kettle", "ladder",
    "mirror",  "narrow",  "ocean",  "pepper",  "ripple", "saddle",
    "timber",  "valley",  "wander", "yellow",  "zephyr", "anchor",
    "basket",  "candle",  "dancer", "feather", "glacier", "hammer"};

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

std::string make_sentence(Rng& rng, int words) {
  std::string out;
  for (int w = 0; w < words; ++w) {
    std::string word(kWords[uniform_int(rng, 0, kWords.size() - 1)]);
    if (w == 0) word[0] = static_cast<char>(std::toupper(word[0]));
    if (!out.empty()) out += ' ';
    out += word;
  }
  out += '.';
  return out;
}

std::string make_prose(Rng& rng, int tokens, const ProseShape& shape) {
  std::string out;
  int produced = 0;
  while (produced < tokens) {
    const int para = std::min(uniform_int(rng, shape.para_min, shape.para_max),
                              std::max(1, tokens - produced));
    std::string paragraph;
    for (int used = 0; used < para;) {
      const int len = std::min(uniform_int(rng, shape.sent_min, shape.sent_max),
                               para - used);
      if (!paragraph.empty()) paragraph += ' ';
      paragraph += make_sentence(rng, len);
      used += len;
    }
    if (!out.empty()) out += "\n\n";
    out += paragraph;
    produced += para;
  }
  return out;
}

ScoreResponse ScriptedScorer::score(const ScoreRequest& request) const {
  if (request.chunks.size() != spans_.size()) {
    throw ProtocolError("scripted scorer expects " +
                        std::to_string(spans_.size()) + " chunks");
  }
  return {spans_, {}};
}

std::vector<double> draw_scores(Rng& rng, std::size_t n, int mode) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> out(n);
  for (double& s : out) {
    switch (mode) {
      case 0:
        s = unit(rng);
        break;
      case 1:
        s = static_cast<double>(uniform_int(rng, 0, 4)) / 4.0;
        break;
      default:
        s = unit(rng) < 0.7 ? 0.0 : unit(rng);
        break;
    }
  }
  return out;
}

ScriptedInstance make_instance(Rng& rng, const InstanceShape& shape) {
  ScriptedInstance inst;
  const int chunks = uniform_int(rng, 1, shape.max_chunks);
  const int mode = uniform_int(rng, 0, 2);
  for (int k = 0; k < chunks; ++k) {
    const int length = uniform_int(rng, shape.chunk_min, shape.chunk_max);
    const int sentences = uniform_int(rng, 1, std::min(shape.max_sentences, length));
    // Random composition of `length` into `sentences` positive parts.
    std::vector<int> cuts;
    for (int c = 1; c < length; ++c) cuts.push_back(c);
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(sentences - 1);
    cuts.push_back(0);
    cuts.push_back(length);
    std::sort(cuts.begin(), cuts.end());

    std::string text;
    std::vector<ScoredSpan> spans;
    std::vector<std::vector<double>> per_sentence;
    for (int m = 0; m < sentences; ++m) {
      const int words = cuts[m + 1] - cuts[m];
      if (!text.empty()) text += ' ';
      const std::size_t base = text.size();
      const std::string sentence = make_sentence(rng, words);
      text += sentence;
      std::vector<double> scores = draw_scores(rng, words, mode);
      std::size_t pos = 0;
      for (int w = 0; w < words; ++w) {
        const std::size_t end = sentence.find(' ', pos);
        const std::size_t stop = end == std::string::npos ? sentence.size() : end;
        spans.push_back({base + pos, base + stop, scores[w]});
        pos = stop + 1;
      }
      per_sentence.push_back(std::move(scores));
    }
    inst.context_tokens += length;
    inst.prompt.unit_hints.push_back(text);
    inst.spans.push_back(std::move(spans));
    inst.word_scores.push_back(std::move(per_sentence));
  }
  for (const std::string& hint : inst.prompt.unit_hints) {
    if (!inst.prompt.context.empty()) inst.prompt.context += '\n';
    inst.prompt.context += hint;
  }
  return inst;
}

std::string make_nq_row(Rng& rng, const std::string& id, int passages,
                        int passage_tokens) {
  nlohmann::json ctxs = nlohmann::json::array();
  const int gold = uniform_int(rng, 0, passages - 1);
  for (int k = 0; k < passages; ++k) {
    std::string text = make_prose(rng, passage_tokens,
                                  {passage_tokens, passage_tokens, 6, 18});
    if (k == gold) text += " The harbor song was recorded by Linda Davis.";
    ctxs.push_back({{"title", "Passage " + std::to_string(k + 1)},
                    {"text", text}});
  }
  const nlohmann::json row = {
      {"id", id},
      {"question", "who recorded the harbor song"},
      {"answers", {"Linda Davis"}},
      {"ctxs", ctxs}};
  return row.dump();
}

std::string make_longbench_row(Rng& rng, const std::string& id,
                               const std::string& task, int tokens) {
  const nlohmann::json row = {{"_id", id},
                              {"dataset", task},
                              {"input", "what happened at the harbor"},
                              {"context", make_prose(rng, tokens)},
                              {"answers", {"harbor"}}};
  return row.dump();
}

}  // namespace r2c::testing
