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

#include "r2c/error.hpp"

#include <utility>

namespace r2c {

TransportError::TransportError(std::string endpoint, std::size_t attempts,
                               bool retryable, const std::string& detail)
    : Error("transport error talking to " + endpoint + " after " +
            std::to_string(attempts) + " attempt(s): " + detail),
      endpoint_(std::move(endpoint)),
      attempts_(attempts),
      retryable_(retryable) {}

SchemaError::SchemaError(std::size_t line, const std::string& detail)
    : Error(line == 0 ? "schema error: " + detail
                      : "schema error at line " + std::to_string(line) +
                            ": " + detail),
      line_(line) {}

}  // namespace r2c
