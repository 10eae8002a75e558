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

#include <chrono>
#include <string>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "r2c/error.hpp"
#include "r2c/remote_scorer.hpp"
#include "support/fake_exporter.hpp"

namespace r2c {
namespace {

using testing::ExporterFault;
using testing::FakeExporter;

RemoteOptions fast_options() {
  RemoteOptions o;
  o.connect_timeout = std::chrono::milliseconds(500);
  o.read_timeout = std::chrono::milliseconds(5000);
  o.retry_backoff = std::chrono::milliseconds(1);
  return o;
}

ScoreRequest two_chunks() {
  return {"who wrote it", {"the first chunk", "a second one here"}, "", {}};
}

TEST(Endpoint, Parses) {
  const Endpoint a = Endpoint::parse("http://localhost:8080/");
  EXPECT_EQ(a.host, "localhost");
  EXPECT_EQ(a.port, 8080);
  EXPECT_EQ(a.url(), "http://localhost:8080");
  EXPECT_EQ(Endpoint::parse("scorer").port, 80);
  EXPECT_EQ(Endpoint::parse("10.0.0.2:9000").host, "10.0.0.2");
  EXPECT_THROW(Endpoint::parse("https://x:1"), ConfigError);
  EXPECT_THROW(Endpoint::parse("x:0"), ConfigError);
  EXPECT_THROW(Endpoint::parse("x:port"), ConfigError);
  EXPECT_THROW(Endpoint::parse("http://"), ConfigError);
}

TEST(RemoteScorer, ScoresThroughService) {
  FakeExporter service;
  const RemoteScorer scorer(Endpoint::parse(service.endpoint()), fast_options());
  EXPECT_TRUE(scorer.healthy());
  EXPECT_EQ(scorer.checkpoint_id(), "fake-fid-tiny");
  const ScoreResponse r = scorer.score(two_chunks());
  ASSERT_EQ(r.per_chunk.size(), 2u);
  EXPECT_EQ(r.per_chunk[0].size(), 3u);
  EXPECT_EQ(r.per_chunk[1].size(), 4u);
  EXPECT_EQ(r.per_chunk[0][1].char_start, 4u);
  EXPECT_EQ(r.backend_meta.at("layers"), "2");
  double total = 0.0;
  for (const auto& spans : r.per_chunk) {
    for (const ScoredSpan& s : spans) total += s.score;
  }
  EXPECT_LE(total, 1.0 + 1e-12);
}

TEST(RemoteScorer, RetriesServerErrors) {
  FakeExporter service;
  service.fail_next(2);
  const RemoteScorer scorer(Endpoint::parse(service.endpoint()), fast_options());
  EXPECT_NO_THROW(scorer.score(two_chunks()));
  EXPECT_EQ(service.calls(), 3);
}

TEST(RemoteScorer, GivesUpAfterRetries) {
  FakeExporter service;
  service.fail_next(10);
  const RemoteScorer scorer(Endpoint::parse(service.endpoint()), fast_options());
  try {
    scorer.score(two_chunks());
    FAIL() << "expected TransportError";
  } catch (const TransportError& e) {
    EXPECT_EQ(e.attempts(), 3u);
    EXPECT_TRUE(e.retryable());
    EXPECT_EQ(e.endpoint(), service.endpoint());
  }
}

TEST(RemoteScorer, UnreachableIsTransportError) {
  int port = 0;
  {
    FakeExporter closed;
    port = closed.port();
  }
  RemoteOptions o = fast_options();
  o.max_retries = 1;
  const RemoteScorer scorer(Endpoint::parse("127.0.0.1:" + std::to_string(port)),
                            o);
  EXPECT_FALSE(scorer.healthy());
  EXPECT_THROW(scorer.score(two_chunks()), TransportError);
  EXPECT_EQ(scorer.checkpoint_id(), "http://127.0.0.1:" + std::to_string(port));
}

TEST(RemoteScorer, Faults) {
  FakeExporter service;
  const RemoteScorer scorer(Endpoint::parse(service.endpoint()), fast_options());
  service.set_fault(ExporterFault::kWrongChunkCount);
  EXPECT_THROW(scorer.score(two_chunks()), ProtocolError);
  service.set_fault(ExporterFault::kVersionMismatch);
  EXPECT_THROW(scorer.score(two_chunks()), ProtocolError);
  service.set_fault(ExporterFault::kNanScore);
  EXPECT_THROW(scorer.score(two_chunks()), ValidationError);
  service.set_fault(ExporterFault::kOutOfRangeSpan);
  EXPECT_THROW(scorer.score(two_chunks()), ValidationError);
}

TEST(RemoteScorer, InvalidRequestRejectedLocally) {
  FakeExporter service;
  const RemoteScorer scorer(Endpoint::parse(service.endpoint()), fast_options());
  EXPECT_THROW(scorer.score({"q", {}, "", {}}), ValidationError);
  EXPECT_EQ(service.calls(), 0);
}

TEST(RemoteScorer, BoundsRequestsInFlight) {
  FakeExporter service;
  service.set_delay_ms(30);
  RemoteOptions o = fast_options();
  o.max_in_flight = 2;
  const RemoteScorer scorer(Endpoint::parse(service.endpoint()), o);
  {
    std::vector<std::jthread> threads;
    for (int t = 0; t < 6; ++t) {
      threads.emplace_back([&] { scorer.score(two_chunks()); });
    }
  }
  EXPECT_EQ(service.calls(), 6);
  EXPECT_LE(service.max_concurrent(), 2);
}

}  // namespace
}  // namespace r2c
