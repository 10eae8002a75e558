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

#include "r2c/gateway.hpp"

#include <algorithm>

#include "r2c/error.hpp"

namespace r2c {

ScorerGateway::ScorerGateway(std::shared_ptr<const Scorer> backend,
                             GatewayOptions options)
    : backend_(std::move(backend)), options_(options) {
  if (!backend_) throw ConfigError("scorer gateway needs a backend");
}

std::string ScorerGateway::cache_key(const std::string& checkpoint,
                                     const std::string& question,
                                     const std::string& chunk) const {
  std::string key;
  key.reserve(checkpoint.size() + question.size() + chunk.size() + 32);
  // Length prefixes keep the key unambiguous for arbitrary text.
  for (const std::string* part : {&checkpoint, &question, &chunk}) {
    key += std::to_string(part->size());
    key += ':';
    key += *part;
  }
  return backend_->name() + "|" + key;
}

ScoreResponse ScorerGateway::score(const ScoreRequest& request) const {
  validate_request(request);
  const std::size_t n = request.chunks.size();
  ScoreResponse response;
  response.per_chunk.resize(n);

  std::vector<std::size_t> misses;
  std::vector<std::string> keys;
  if (options_.enable_cache) {
    const std::string checkpoint = backend_->checkpoint_id();
    keys.reserve(n);
    std::lock_guard lock(mutex_);
    for (std::size_t i = 0; i < n; ++i) {
      keys.push_back(cache_key(checkpoint, request.question, request.chunks[i]));
      if (const auto it = cache_.find(keys.back()); it != cache_.end()) {
        response.per_chunk[i] = it->second;
        ++cache_hits_;
      } else {
        misses.push_back(i);
      }
    }
  } else {
    misses.resize(n);
    for (std::size_t i = 0; i < n; ++i) misses[i] = i;
  }

  const std::size_t batch =
      options_.max_batch_chunks == 0 ? std::max<std::size_t>(misses.size(), 1)
                                     : options_.max_batch_chunks;
  std::size_t batches = 0;
  for (std::size_t lo = 0; lo < misses.size(); lo += batch) {
    const std::size_t hi = std::min(misses.size(), lo + batch);
    ScoreRequest sub;
    sub.question = request.question;
    sub.backend = request.backend;
    sub.options = request.options;
    for (std::size_t k = lo; k < hi; ++k) {
      sub.chunks.push_back(request.chunks[misses[k]]);
    }
    ScoreResponse part = backend_->score(sub);
    validate_response(sub, part);
    ++batches;
    if (response.backend_meta.empty()) response.backend_meta = part.backend_meta;

    std::lock_guard lock(mutex_);
    ++backend_calls_;
    if (options_.enable_cache && cache_.size() + (hi - lo) > options_.cache_capacity) {
      cache_.clear();
    }
    for (std::size_t k = lo; k < hi; ++k) {
      const std::size_t i = misses[k];
      response.per_chunk[i] = std::move(part.per_chunk[k - lo]);
      if (options_.enable_cache) cache_[keys[i]] = response.per_chunk[i];
    }
  }
  response.backend_meta["backend"] = backend_->name();
  response.backend_meta["gateway_batches"] = std::to_string(batches);
  response.backend_meta["gateway_cached_chunks"] =
      std::to_string(n - misses.size());
  return response;
}

std::size_t ScorerGateway::cache_hits() const {
  std::lock_guard lock(mutex_);
  return cache_hits_;
}

std::size_t ScorerGateway::backend_calls() const {
  std::lock_guard lock(mutex_);
  return backend_calls_;
}

std::shared_ptr<Scorer> make_scorer(std::string_view spec,
                                    std::string_view default_endpoint,
                                    const RemoteOptions& remote,
                                    const GatewayOptions& gateway) {
  std::shared_ptr<const Scorer> backend;
  if (spec == "uniform") {
    backend = std::make_shared<UniformScorer>();
  } else if (spec == "lexical") {
    backend = std::make_shared<LexicalScorer>();
  } else if (spec == "remote" || spec.starts_with("remote:")) {
    std::string_view target =
        spec == "remote" ? default_endpoint : spec.substr(7);
    if (target.empty()) {
      throw ConfigError(
          "remote scorer needs an endpoint (remote:HOST:PORT or "
          "R2C_SCORER_ENDPOINT)");
    }
    backend = std::make_shared<RemoteScorer>(Endpoint::parse(target), remote);
  } else {
    throw ConfigError("unknown scorer '" + std::string(spec) +
                      "' (expected uniform, lexical or remote:ENDPOINT)");
  }
  return std::make_shared<ScorerGateway>(std::move(backend), gateway);
}

}  // namespace r2c
