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

#include "r2c/wire.hpp"

#include <limits>

#include <nlohmann/json.hpp>

#include "r2c/error.hpp"

namespace r2c::wire {
namespace {

using nlohmann::json;

json parse(std::string_view body) {
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw ProtocolError(std::string("malformed JSON: ") + e.what());
  }
}

void check_envelope(const json& doc) {
  if (!doc.is_object()) throw ProtocolError("envelope is not a JSON object");
  const auto version = doc.find("protocol_version");
  if (version == doc.end() || !version->is_string()) {
    throw ProtocolError("missing protocol_version");
  }
  if (version->get<std::string>() != kProtocolVersion) {
    throw ProtocolError("protocol version mismatch: got '" +
                        version->get<std::string>() + "', expected '" +
                        std::string(kProtocolVersion) + "'");
  }
  const auto encoding = doc.find("encoding");
  if (encoding == doc.end() || !encoding->is_string() ||
      encoding->get<std::string>() != kTextEncoding) {
    throw ProtocolError("missing or unsupported text encoding (expected " +
                        std::string(kTextEncoding) + ")");
  }
}

const json& field(const json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) {
    throw ProtocolError(std::string("missing field '") + name + "'");
  }
  return *it;
}

std::size_t offset(const json& value, const char* name) {
  if (!value.is_number_unsigned() && !value.is_number_integer()) {
    throw ProtocolError(std::string("span field '") + name +
                        "' is not an integer");
  }
  const auto v = value.get<std::int64_t>();
  if (v < 0) {
    throw ValidationError(std::string("span field '") + name +
                          "' is negative");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

std::string encode_request(const ScoreRequest& request) {
  json doc = {
      {"protocol_version", kProtocolVersion},
      {"encoding", kTextEncoding},
      {"question", request.question},
      {"chunks", request.chunks},
      {"backend", request.backend},
      {"options", request.options},
  };
  return doc.dump();
}

ScoreRequest decode_request(std::string_view body) {
  const json doc = parse(body);
  check_envelope(doc);
  ScoreRequest request;
  try {
    request.question = field(doc, "question").get<std::string>();
    request.chunks = field(doc, "chunks").get<std::vector<std::string>>();
    if (doc.contains("backend")) {
      request.backend = doc["backend"].get<std::string>();
    }
    if (doc.contains("options")) {
      request.options =
          doc["options"].get<std::map<std::string, std::string>>();
    }
  } catch (const json::type_error& e) {
    throw ProtocolError(std::string("bad request field type: ") + e.what());
  }
  return request;
}

std::string encode_response(const ScoreResponse& response) {
  json per_chunk = json::array();
  for (const auto& spans : response.per_chunk) {
    json list = json::array();
    for (const ScoredSpan& s : spans) {
      list.push_back(
          {{"start", s.char_start}, {"end", s.char_end}, {"score", s.score}});
    }
    per_chunk.push_back(std::move(list));
  }
  json doc = {
      {"protocol_version", kProtocolVersion},
      {"encoding", kTextEncoding},
      {"per_chunk", std::move(per_chunk)},
      {"backend_meta", response.backend_meta},
  };
  return doc.dump();
}

ScoreResponse decode_response(std::string_view body) {
  const json doc = parse(body);
  check_envelope(doc);
  const json& per_chunk = field(doc, "per_chunk");
  if (!per_chunk.is_array()) throw ProtocolError("per_chunk is not an array");

  ScoreResponse response;
  response.per_chunk.reserve(per_chunk.size());
  for (const json& list : per_chunk) {
    if (!list.is_array()) throw ProtocolError("span list is not an array");
    std::vector<ScoredSpan> spans;
    spans.reserve(list.size());
    for (const json& item : list) {
      if (!item.is_object()) throw ProtocolError("span is not an object");
      ScoredSpan s;
      s.char_start = offset(field(item, "start"), "start");
      s.char_end = offset(field(item, "end"), "end");
      const json& score = field(item, "score");
      if (score.is_null()) {
        // NaN and infinities serialize as null.
        s.score = std::numeric_limits<double>::quiet_NaN();
      } else if (score.is_number()) {
        s.score = score.get<double>();
      } else {
        throw ValidationError("span score is not a number");
      }
      spans.push_back(s);
    }
    response.per_chunk.push_back(std::move(spans));
  }
  if (const auto meta = doc.find("backend_meta");
      meta != doc.end() && meta->is_object()) {
    for (const auto& [key, value] : meta->items()) {
      response.backend_meta[key] =
          value.is_string() ? value.get<std::string>() : value.dump();
    }
  }
  return response;
}

std::string encode_error(std::string_view kind, std::string_view message) {
  json doc = {
      {"protocol_version", kProtocolVersion},
      {"encoding", kTextEncoding},
      {"error", {{"kind", kind}, {"message", message}}},
  };
  return doc.dump();
}

std::string decode_error_message(std::string_view body) {
  try {
    const json doc = json::parse(body);
    return doc.at("error").at("message").get<std::string>();
  } catch (const json::exception&) {
    return std::string(body);
  }
}

}  // namespace r2c::wire
