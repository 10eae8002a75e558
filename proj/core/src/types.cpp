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

#include "r2c/types.hpp"

#include <cmath>
#include <string>

#include "r2c/error.hpp"

namespace r2c {

std::string_view to_string(Pooling pooling) noexcept {
  switch (pooling) {
    case Pooling::kMean:
      return "mean";
    case Pooling::kMax:
      return "max";
    case Pooling::kSum:
      return "sum";
  }
  return "mean";
}

std::string_view to_string(Ordering ordering) noexcept {
  return ordering == Ordering::kSorted ? "sorted" : "original";
}

Pooling parse_pooling(std::string_view name) {
  if (name == "mean") return Pooling::kMean;
  if (name == "max") return Pooling::kMax;
  if (name == "sum") return Pooling::kSum;
  throw ConfigError("unknown pooling mode '" + std::string(name) +
                    "' (expected mean, max or sum)");
}

Ordering parse_ordering(std::string_view name) {
  if (name == "original") return Ordering::kOriginal;
  if (name == "sorted") return Ordering::kSorted;
  throw ConfigError("unknown ordering '" + std::string(name) +
                    "' (expected original or sorted)");
}

void CompressionConfig::validate() const {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw ConfigError("rho must lie in [0, 1], got " + std::to_string(rho));
  }
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw ConfigError("gamma must be a finite value >= 0, got " +
                      std::to_string(gamma));
  }
  if (target_tokens < 0) {
    throw ConfigError("target tokens must be >= 0");
  }
  if (max_chunk_tokens < 1) {
    throw ConfigError("max chunk tokens must be >= 1");
  }
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ConfigError("epsilon must be a small positive value");
  }
}

}  // namespace r2c
