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

#include <span>
#include <string>
#include <string_view>

namespace r2c::eval {

// Lowercase, drop ASCII punctuation, drop the articles a/an/the, collapse
// whitespace to single spaces.
std::string normalize_answer(std::string_view text);

// 1 when any normalized answer occurs inside the normalized prediction.
// Answers that normalize to nothing never match; an empty prediction
// scores 0.
int span_em(std::string_view prediction, std::span<const std::string> answers);

}  // namespace r2c::eval
