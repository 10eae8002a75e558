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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace r2c {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration value, unknown tokenizer or backend name.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Data that violates a domain invariant (negative score, span outside its
// chunk, misaligned span lists).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Scorer wire-protocol violation: version mismatch, chunk-count mismatch,
// malformed envelope.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// The remote scorer could not be reached. Carries enough metadata for the
// caller to decide whether to retry.
class TransportError : public Error {
 public:
  TransportError(std::string endpoint, std::size_t attempts, bool retryable,
                 const std::string& detail);

  const std::string& endpoint() const noexcept { return endpoint_; }
  std::size_t attempts() const noexcept { return attempts_; }
  bool retryable() const noexcept { return retryable_; }

 private:
  std::string endpoint_;
  std::size_t attempts_;
  bool retryable_;
};

// Dataset row that does not match the expected schema.
class SchemaError : public Error {
 public:
  SchemaError(std::size_t line, const std::string& detail);

  // 1-based line number in the input file, 0 when not line-oriented.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace r2c
