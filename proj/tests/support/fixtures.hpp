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

#include <string>
#include <vector>

namespace r2c::testing {

struct SpanEmCase {
  std::string prediction;
  std::vector<std::string> answers;
  int expected = 0;
};

// Reads a span EM fixture: prediction, '|'-separated answers and the
// expected label, tab-separated; '#' lines are comments and a literal "\n"
// in the prediction stands for a newline. Throws std::runtime_error.
std::vector<SpanEmCase> load_span_em_cases(const std::string& path);

}  // namespace r2c::testing
