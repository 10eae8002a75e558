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

#include <fstream>
#include <map>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "r2c/error.hpp"
#include "r2c/settings.hpp"

namespace r2c {
namespace {

TEST(Settings, Defaults) {
  const Settings s = resolve_settings({}, {}, {});
  EXPECT_EQ(s.compression.rho, 0.8);
  EXPECT_EQ(s.compression.gamma, 1.0);
  EXPECT_EQ(s.compression.pooling, Pooling::kMean);
  EXPECT_EQ(s.compression.ordering, Ordering::kOriginal);
  EXPECT_EQ(s.compression.max_chunk_tokens, 128);
  EXPECT_EQ(s.scorer, "lexical");
  EXPECT_EQ(s.tokenizer, "whitespace");
  EXPECT_EQ(s.origin.at("rho"), "default");
}

TEST(Settings, PrecedenceFlagsEnvFile) {
  const KeyValues file = {{"rho", "0.5"}, {"gamma", "2"}, {"pooling", "max"}};
  const KeyValues env = {{"rho", "0.6"}, {"gamma", "3"}};
  const KeyValues flags = {{"rho", "0.7"}};
  const Settings s = resolve_settings(flags, env, file);
  EXPECT_EQ(s.compression.rho, 0.7);
  EXPECT_EQ(s.compression.gamma, 3.0);
  EXPECT_EQ(s.compression.pooling, Pooling::kMax);
  EXPECT_EQ(s.origin.at("rho"), "flag");
  EXPECT_EQ(s.origin.at("gamma"), "env");
  EXPECT_EQ(s.origin.at("pooling"), "file");
}

TEST(Settings, ParsesConfigText) {
  const KeyValues kv = parse_config_text(
      "# comment\n"
      "target_tokens = 500\n"
      "\n"
      "  ordering=sorted   # trailing comment\n"
      "scorer_endpoint = http://scorer:8000\n");
  EXPECT_EQ(kv.at("target_tokens"), "500");
  EXPECT_EQ(kv.at("ordering"), "sorted");
  EXPECT_EQ(kv.at("scorer_endpoint"), "http://scorer:8000");
}

TEST(Settings, ConfigErrors) {
  EXPECT_THROW(parse_config_text("no equals sign"), ConfigError);
  EXPECT_THROW(parse_config_text("colour = blue"), ConfigError);
  EXPECT_THROW(resolve_settings({{"rho", "1.5"}}, {}, {}), ConfigError);
  EXPECT_THROW(resolve_settings({{"rho", "abc"}}, {}, {}), ConfigError);
  EXPECT_THROW(resolve_settings({{"target_tokens", "12x"}}, {}, {}), ConfigError);
  EXPECT_THROW(resolve_settings({{"pooling", "median"}}, {}, {}), ConfigError);
  EXPECT_THROW(resolve_settings({{"slack_rollover", "maybe"}}, {}, {}),
               ConfigError);
  EXPECT_THROW(resolve_settings({{"jobs", "0"}}, {}, {}), ConfigError);
  EXPECT_THROW(load_config_file("/nonexistent/r2c.conf"), ConfigError);
}

TEST(Settings, LoadsFile) {
  const std::string path = ::testing::TempDir() + "r2c_test.conf";
  std::ofstream(path) << "gamma = 0\nslack_rollover = yes\n";
  const Settings s = resolve_settings({}, {}, load_config_file(path));
  EXPECT_EQ(s.compression.gamma, 0.0);
  EXPECT_TRUE(s.compression.slack_rollover);
}

TEST(Settings, EnvironmentNames) {
  const std::map<std::string, std::string> env = {
      {"R2C_SCORER_ENDPOINT", "http://x:1"}, {"R2C_RHO", "0.25"},
      {"R2C_GAMMA", ""}, {"RHO", "0.9"}};
  const KeyValues kv = settings_from_environment([&](const char* name) -> const char* {
    const auto it = env.find(name);
    return it == env.end() ? nullptr : it->second.c_str();
  });
  EXPECT_EQ(kv.size(), 2u);
  EXPECT_EQ(kv.at("scorer_endpoint"), "http://x:1");
  EXPECT_EQ(kv.at("rho"), "0.25");
}

TEST(Settings, JsonEcho) {
  const Settings s = resolve_settings({{"target_tokens", "2000"}}, {}, {});
  const auto doc = nlohmann::json::parse(settings_to_json(s));
  EXPECT_EQ(doc["target_tokens"], 2000);
  EXPECT_EQ(doc["rho"], 0.8);
  EXPECT_EQ(doc["pooling"], "mean");
  EXPECT_EQ(doc["origin"]["target_tokens"], "flag");
}

}  // namespace
}  // namespace r2c
