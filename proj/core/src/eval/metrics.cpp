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

#include "r2c/eval/metrics.hpp"

#include <cctype>
#include <sstream>

namespace r2c::eval {

std::string normalize_answer(std::string_view text) {
  std::string lowered;
  lowered.reserve(text.size());
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::ispunct(c)) continue;
    lowered += static_cast<char>(std::tolower(c));
  }
  std::istringstream words(lowered);
  std::string word;
  std::string out;
  while (words >> word) {
    if (word == "a" || word == "an" || word == "the") continue;
    if (!out.empty()) out += ' ';
    out += word;
  }
  return out;
}

int span_em(std::string_view prediction, std::span<const std::string> answers) {
  const std::string pred = normalize_answer(prediction);
  if (pred.empty()) return 0;
  for (const std::string& answer : answers) {
    const std::string gold = normalize_answer(answer);
    if (!gold.empty() && pred.find(gold) != std::string::npos) return 1;
  }
  return 0;
}

}  // namespace r2c::eval
