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

#include "r2c/remote_scorer.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <optional>
#include <semaphore>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "r2c/error.hpp"
#include "r2c/wire.hpp"

namespace r2c {

Endpoint Endpoint::parse(std::string_view text) {
  Endpoint ep;
  if (const auto pos = text.find("://"); pos != std::string_view::npos) {
    ep.scheme = std::string(text.substr(0, pos));
    text.remove_prefix(pos + 3);
  }
  if (ep.scheme != "http") {
    throw ConfigError("unsupported scorer endpoint scheme '" + ep.scheme +
                      "' (only http is available)");
  }
  while (!text.empty() && text.back() == '/') text.remove_suffix(1);
  if (const auto colon = text.rfind(':'); colon != std::string_view::npos) {
    const std::string_view port = text.substr(colon + 1);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(port.data(), port.data() + port.size(), value);
    if (ec != std::errc() || ptr != port.data() + port.size() || value <= 0 ||
        value > 65535) {
      throw ConfigError("bad port in scorer endpoint '" + std::string(text) +
                        "'");
    }
    ep.port = value;
    text = text.substr(0, colon);
  }
  if (text.empty()) throw ConfigError("scorer endpoint has no host");
  ep.host = std::string(text);
  return ep;
}

std::string Endpoint::url() const {
  return scheme + "://" + host + ":" + std::to_string(port);
}

struct RemoteScorer::State {
  explicit State(std::size_t slots)
      : in_flight(static_cast<std::ptrdiff_t>(slots)) {}

  std::counting_semaphore<1024> in_flight;
  std::mutex checkpoint_mutex;
  std::optional<std::string> checkpoint;
};

namespace {

class SlotGuard {
 public:
  explicit SlotGuard(std::counting_semaphore<1024>& sem) : sem_(sem) {
    sem_.acquire();
  }
  ~SlotGuard() { sem_.release(); }
  SlotGuard(const SlotGuard&) = delete;
  SlotGuard& operator=(const SlotGuard&) = delete;

 private:
  std::counting_semaphore<1024>& sem_;
};

}  // namespace

RemoteScorer::RemoteScorer(Endpoint endpoint, RemoteOptions options)
    : endpoint_(std::move(endpoint)),
      options_(std::move(options)),
      state_(std::make_unique<State>(
          std::clamp<std::size_t>(options_.max_in_flight, 1, 1024))) {}

RemoteScorer::~RemoteScorer() = default;

namespace {

httplib::Client make_client(const Endpoint& ep, const RemoteOptions& opt) {
  httplib::Client client(ep.host, ep.port);
  client.set_connection_timeout(opt.connect_timeout);
  client.set_read_timeout(opt.read_timeout);
  client.set_write_timeout(opt.read_timeout);
  return client;
}

}  // namespace

bool RemoteScorer::healthy() const {
  auto client = make_client(endpoint_, options_);
  const auto res = client.Get(std::string(wire::kHealthPath));
  return res && res->status == 200;
}

std::string RemoteScorer::checkpoint_id() const {
  std::lock_guard lock(state_->checkpoint_mutex);
  if (state_->checkpoint) return *state_->checkpoint;
  auto client = make_client(endpoint_, options_);
  const auto res = client.Get(std::string(wire::kVersionPath));
  if (res && res->status == 200) {
    try {
      const auto doc = nlohmann::json::parse(res->body);
      state_->checkpoint = doc.value("checkpoint", endpoint_.url());
      return *state_->checkpoint;
    } catch (const nlohmann::json::exception&) {
    }
  }
  // Not cached: the service may come up later.
  return endpoint_.url();
}

ScoreResponse RemoteScorer::score(const ScoreRequest& request) const {
  validate_request(request);
  ScoreRequest outgoing = request;
  if (outgoing.backend.empty() || outgoing.backend == "remote") {
    outgoing.backend = options_.backend;
  }
  const std::string body = wire::encode_request(outgoing);

  SlotGuard slot(state_->in_flight);
  std::string last_error;
  const std::size_t attempts = options_.max_retries + 1;
  for (std::size_t attempt = 1; attempt <= attempts; ++attempt) {
    auto client = make_client(endpoint_, options_);
    const auto res =
        client.Post(std::string(wire::kScorePath), body, "application/json");
    if (!res) {
      last_error = httplib::to_string(res.error());
    } else if (res->status >= 500) {
      last_error = "HTTP " + std::to_string(res->status) + ": " +
                   wire::decode_error_message(res->body);
    } else if (res->status != 200) {
      throw ProtocolError("scorer rejected request (HTTP " +
                          std::to_string(res->status) +
                          "): " + wire::decode_error_message(res->body));
    } else {
      ScoreResponse response = wire::decode_response(res->body);
      validate_response(request, response);
      return response;
    }
    if (attempt < attempts) {
      std::this_thread::sleep_for(options_.retry_backoff * attempt);
    }
  }
  throw TransportError(endpoint_.url(), attempts, true, last_error);
}

}  // namespace r2c
