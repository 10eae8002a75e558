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

#include "r2c/audit.hpp"

#include <chrono>

#include <nlohmann/json.hpp>

namespace r2c {

std::string audit_record(const CompressionResult& result,
                         std::string_view prompt_id) {
  using Ms = std::chrono::duration<double, std::milli>;
  nlohmann::json kept = nlohmann::json::array();
  for (const KeptChunk& k : result.kept_chunks) {
    kept.push_back({{"chunk", k.index_original},
                    {"kept_sentences", k.kept_sentences},
                    {"sentence_budget", k.sentence_budget},
                    {"removed_tokens", k.removed_tokens},
                    {"emptied", k.emptied}});
  }
  const nlohmann::json doc = {
      {"event", "prompt"},
      {"id", prompt_id},
      {"chunk_count", result.chunk_count},
      {"original_tokens", result.original_tokens},
      {"compressed_tokens", result.compressed_tokens},
      {"rejoined_tokens", result.rejoined_tokens},
      {"e_comp", result.plan.e_comp},
      {"e_chunk", result.plan.e_chunk},
      {"e_sent", result.plan.e_sent},
      {"per_chunk_budgets", result.plan.per_chunk_budgets},
      {"removed_chunk_tokens", result.removed_chunk_tokens},
      {"removed_sentence_tokens", result.removed_sentence_tokens},
      {"kept_chunks", kept},
      {"dropped_chunks", result.dropped_chunks},
      {"noop", result.noop},
      {"all_chunks_dropped", result.all_chunks_dropped},
      {"empty_output", result.empty_output},
      {"hard_split", result.hard_split},
      {"scoring_ms", Ms(result.scoring_time).count()},
      {"total_ms", Ms(result.total_time).count()},
  };
  return doc.dump();
}

}  // namespace r2c
