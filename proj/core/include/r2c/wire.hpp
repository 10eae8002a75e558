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

// JSON envelope shared with the attention exporter service. See
// docs/wire_protocol.md for the field-by-field description.

#include <string>
#include <string_view>

#include "r2c/scorer.hpp"

namespace r2c::wire {

inline constexpr std::string_view kProtocolVersion = "r2c-score/1";
inline constexpr std::string_view kTextEncoding = "utf-8";

inline constexpr std::string_view kScorePath = "/score";
inline constexpr std::string_view kHealthPath = "/health";
inline constexpr std::string_view kVersionPath = "/version";

std::string encode_request(const ScoreRequest& request);
// Throws ProtocolError on malformed JSON, a missing field, or a version or
// encoding mismatch.
ScoreRequest decode_request(std::string_view body);

std::string encode_response(const ScoreResponse& response);
// As decode_request; a null or non-numeric score raises ValidationError.
ScoreResponse decode_response(std::string_view body);

// Error body returned by the service on a rejected request.
std::string encode_error(std::string_view kind, std::string_view message);
// Returns the "error.message" field of an error body, or the raw body if it
// is not a protocol error envelope.
std::string decode_error_message(std::string_view body);

}  // namespace r2c::wire
