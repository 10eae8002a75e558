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

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "r2c/remote_scorer.hpp"
#include "r2c/scorer.hpp"

namespace r2c {

struct GatewayOptions {
  // Largest number of chunks sent to the backend in one call; 0 = no limit.
  std::size_t max_batch_chunks = 0;
  bool enable_cache = true;
  // Cached chunk entries kept before the cache is reset.
  std::size_t cache_capacity = 1 << 16;
};

// Uniform front for every scoring backend. Splits large requests into
// sub-batches, reassembles them in request order, validates every backend
// response and caches per-chunk results keyed by
// (backend, checkpoint, question, chunk text).
class ScorerGateway final : public Scorer {
 public:
  explicit ScorerGateway(std::shared_ptr<const Scorer> backend,
                         GatewayOptions options = {});

  std::string name() const override { return backend_->name(); }
  std::string checkpoint_id() const override {
    return backend_->checkpoint_id();
  }
  ScoreResponse score(const ScoreRequest& request) const override;

  std::size_t cache_hits() const;
  std::size_t backend_calls() const;

 private:
  std::string cache_key(const std::string& checkpoint,
                        const std::string& question,
                        const std::string& chunk) const;

  std::shared_ptr<const Scorer> backend_;
  GatewayOptions options_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::string, std::vector<ScoredSpan>> cache_;
  mutable std::size_t cache_hits_ = 0;
  mutable std::size_t backend_calls_ = 0;
};

// Builds a gateway from a backend spec: "uniform", "lexical",
// "remote:<endpoint>", or "remote" (endpoint from `default_endpoint`, which
// callers usually fill from R2C_SCORER_ENDPOINT). Throws ConfigError.
std::shared_ptr<Scorer> make_scorer(std::string_view spec,
                                    std::string_view default_endpoint = {},
                                    const RemoteOptions& remote = {},
                                    const GatewayOptions& gateway = {});

}  // namespace r2c
