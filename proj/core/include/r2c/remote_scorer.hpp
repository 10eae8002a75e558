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

#include <chrono>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "r2c/scorer.hpp"

namespace r2c {

struct Endpoint {
  std::string scheme = "http";
  std::string host;
  int port = 80;

  // Parses "http://host:port", "host:port" or "host". Throws ConfigError.
  static Endpoint parse(std::string_view text);
  std::string url() const;
};

struct RemoteOptions {
  std::chrono::milliseconds connect_timeout{2000};
  std::chrono::milliseconds read_timeout{60000};
  // Attempts after the first one for connection failures and 5xx replies.
  std::size_t max_retries = 2;
  std::chrono::milliseconds retry_backoff{100};
  // Upper bound on concurrent requests to the service.
  std::size_t max_in_flight = 4;
  // Backend name sent in the request envelope.
  std::string backend = "fid";
};

// Client for the attention exporter service.
class RemoteScorer final : public Scorer {
 public:
  explicit RemoteScorer(Endpoint endpoint, RemoteOptions options = {});
  ~RemoteScorer() override;

  std::string name() const override { return "remote"; }
  // Checkpoint reported by the service's version endpoint; falls back to
  // the endpoint URL if the service does not answer.
  std::string checkpoint_id() const override;

  // Throws TransportError when the service is unreachable after retries,
  // ProtocolError on envelope problems, ValidationError on bad scores.
  ScoreResponse score(const ScoreRequest& request) const override;

  bool healthy() const;
  const Endpoint& endpoint() const noexcept { return endpoint_; }

 private:
  struct State;

  Endpoint endpoint_;
  RemoteOptions options_;
  std::unique_ptr<State> state_;
};

}  // namespace r2c
