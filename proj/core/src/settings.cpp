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

#include "r2c/settings.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "r2c/error.hpp"

namespace r2c {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool is_known_key(std::string_view key) {
  return std::find(kSettingKeys.begin(), kSettingKeys.end(), key) !=
         kSettingKeys.end();
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view value) {
  Int out{};
  const auto [ptr, ec] =
      std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError("setting '" + std::string(key) +
                      "' expects an integer, got '" + std::string(value) + "'");
  }
  return out;
}

double parse_double(std::string_view key, std::string_view value) {
  const std::string text(value);
  char* end = nullptr;
  const double out = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw ConfigError("setting '" + std::string(key) +
                      "' expects a number, got '" + text + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
  if (value == "true" || value == "1" || value == "yes" || value == "on") {
    return true;
  }
  if (value == "false" || value == "0" || value == "no" || value == "off") {
    return false;
  }
  throw ConfigError("setting '" + std::string(key) +
                    "' expects true or false, got '" + std::string(value) +
                    "'");
}

void apply(Settings& s, std::string_view key, std::string_view value) {
  CompressionConfig& c = s.compression;
  if (key == "target_tokens") {
    c.target_tokens = parse_int<TokenCount>(key, value);
  } else if (key == "rho") {
    c.rho = parse_double(key, value);
  } else if (key == "gamma") {
    c.gamma = parse_double(key, value);
  } else if (key == "pooling") {
    c.pooling = parse_pooling(value);
  } else if (key == "ordering") {
    c.ordering = parse_ordering(value);
  } else if (key == "max_chunk_tokens") {
    c.max_chunk_tokens = parse_int<TokenCount>(key, value);
  } else if (key == "epsilon") {
    c.epsilon = parse_double(key, value);
  } else if (key == "slack_rollover") {
    c.slack_rollover = parse_bool(key, value);
  } else if (key == "scorer") {
    s.scorer = std::string(value);
  } else if (key == "scorer_endpoint") {
    s.scorer_endpoint = std::string(value);
  } else if (key == "tokenizer") {
    s.tokenizer = std::string(value);
  } else if (key == "jobs") {
    s.jobs = parse_int<std::size_t>(key, value);
  } else if (key == "max_batch_chunks") {
    s.max_batch_chunks = parse_int<std::size_t>(key, value);
  } else {
    throw ConfigError("unknown setting '" + std::string(key) + "'");
  }
}

}  // namespace

KeyValues parse_config_text(std::string_view text) {
  KeyValues out;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    if (!is_known_key(key)) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": unknown setting '" + key + "'");
    }
    out[key] = std::string(trim(line.substr(eq + 1)));
  }
  return out;
}

KeyValues load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

KeyValues settings_from_environment(const EnvLookup& lookup) {
  KeyValues out;
  for (std::string_view key : kSettingKeys) {
    std::string name = "R2C_";
    for (char c : key) {
      name += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    if (const char* value = lookup(name.c_str()); value && *value) {
      out[std::string(key)] = value;
    }
  }
  return out;
}

KeyValues settings_from_environment() {
  return settings_from_environment(
      [](const char* name) { return std::getenv(name); });
}

Settings resolve_settings(const KeyValues& flags, const KeyValues& env,
                          const KeyValues& file) {
  Settings s;
  for (std::string_view key : kSettingKeys) s.origin[std::string(key)] = "default";
  const std::pair<const KeyValues*, const char*> layers[] = {
      {&file, "file"}, {&env, "env"}, {&flags, "flag"}};
  for (const auto& [values, origin] : layers) {
    for (const auto& [key, value] : *values) {
      apply(s, key, value);
      s.origin[key] = origin;
    }
  }
  s.compression.validate();
  if (s.jobs == 0) throw ConfigError("jobs must be >= 1");
  return s;
}

std::string settings_to_json(const Settings& s) {
  const CompressionConfig& c = s.compression;
  nlohmann::json doc = {
      {"target_tokens", c.target_tokens},
      {"rho", c.rho},
      {"gamma", c.gamma},
      {"pooling", to_string(c.pooling)},
      {"ordering", to_string(c.ordering)},
      {"max_chunk_tokens", c.max_chunk_tokens},
      {"epsilon", c.epsilon},
      {"slack_rollover", c.slack_rollover},
      {"scorer", s.scorer},
      {"scorer_endpoint", s.scorer_endpoint},
      {"tokenizer", s.tokenizer},
      {"jobs", s.jobs},
      {"max_batch_chunks", s.max_batch_chunks},
      {"origin", s.origin},
  };
  return doc.dump();
}

}  // namespace r2c
