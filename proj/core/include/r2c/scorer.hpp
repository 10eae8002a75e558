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

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "r2c/types.hpp"

namespace r2c {

struct ScoreRequest {
  // Empty when the prompt has no question.
  std::string question;
  std::vector<std::string> chunks;
  std::string backend;
  std::map<std::string, std::string> options;
};

struct ScoreResponse {
  // One span list per request chunk, in request order. Offsets are bytes
  // into the chunk text; spans never cover the question or special tokens.
  std::vector<std::vector<ScoredSpan>> per_chunk;
  // Backend diagnostics, e.g. "layers" and "heads" for the remote exporter.
  std::map<std::string, std::string> backend_meta;
};

// Produces token-level importance for a (question, chunks) pair.
// Implementations must be safe to call concurrently.
class Scorer {
 public:
  virtual ~Scorer() = default;

  virtual std::string name() const = 0;
  // Identifies the scoring model; part of the gateway cache key.
  virtual std::string checkpoint_id() const { return name(); }
  virtual ScoreResponse score(const ScoreRequest& request) const = 0;
};

// Every whitespace-delimited word scores 1.
class UniformScorer final : public Scorer {
 public:
  std::string name() const override { return "uniform"; }
  ScoreResponse score(const ScoreRequest& request) const override;
};

// A word scores 1 when its normalized form (lowercase, punctuation stripped)
// occurs among the question's words, 0 otherwise.
class LexicalScorer final : public Scorer {
 public:
  std::string name() const override { return "lexical"; }
  ScoreResponse score(const ScoreRequest& request) const override;
};

// Lowercases and strips ASCII punctuation from both ends of a word.
std::string normalize_word(std::string_view word);

// Throws ValidationError for empty chunk lists or empty chunk texts.
void validate_request(const ScoreRequest& request);

// Checks a response against the request it answers:
//  - ProtocolError when the chunk counts differ;
//  - ValidationError for non-finite or negative scores, spans outside their
//    chunk, empty spans, or spans out of order / overlapping.
void validate_response(const ScoreRequest& request,
                       const ScoreResponse& response);

}  // namespace r2c
