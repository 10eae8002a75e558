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

// Run settings for the command-line front end. Values are layered with the
// precedence flags > environment > config file > built-in defaults.
//
// Config files hold one "key = value" per line; '#' starts a comment.
// Environment variables are the upper-cased keys with an R2C_ prefix
// (R2C_SCORER_ENDPOINT, R2C_RHO, ...).

#include <array>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "r2c/types.hpp"

namespace r2c {

using KeyValues = std::map<std::string, std::string, std::less<>>;

inline constexpr std::array<std::string_view, 13> kSettingKeys = {
    "target_tokens", "rho",        "gamma",           "pooling",
    "ordering",      "max_chunk_tokens", "epsilon",   "slack_rollover",
    "scorer",        "scorer_endpoint",  "tokenizer", "jobs",
    "max_batch_chunks"};

struct Settings {
  CompressionConfig compression;
  std::string scorer = "lexical";
  // Endpoint used when `scorer` is plain "remote".
  std::string scorer_endpoint;
  std::string tokenizer = "whitespace";
  std::size_t jobs = 1;
  std::size_t max_batch_chunks = 0;
  // Where each key's value came from: flag, env, file or default.
  std::map<std::string, std::string> origin;
};

// Throws ConfigError naming the offending line.
KeyValues parse_config_text(std::string_view text);
KeyValues load_config_file(const std::filesystem::path& path);

using EnvLookup = std::function<const char*(const char*)>;
KeyValues settings_from_environment(const EnvLookup& lookup);
KeyValues settings_from_environment();

// Throws ConfigError for unknown keys, unparsable values, or a resulting
// CompressionConfig that fails validation.
Settings resolve_settings(const KeyValues& flags, const KeyValues& env,
                          const KeyValues& file);

// Effective settings as a JSON object, for audit trails.
std::string settings_to_json(const Settings& settings);

}  // namespace r2c
