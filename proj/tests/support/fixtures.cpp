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

#include "support/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace r2c::testing {

std::vector<SpanEmCase> load_span_em_cases(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<SpanEmCase> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream row(line);
    for (std::string col; std::getline(row, col, '\t');) cols.push_back(col);
    if (cols.size() != 3) throw std::runtime_error("bad fixture line: " + line);
    SpanEmCase c;
    c.prediction = cols[0];
    for (std::size_t at; (at = c.prediction.find("\\n")) != std::string::npos;) {
      c.prediction.replace(at, 2, "\n");
    }
    std::stringstream alts(cols[1]);
    for (std::string a; std::getline(alts, a, '|');) c.answers.push_back(a);
    c.expected = std::stoi(cols[2]);
    cases.push_back(std::move(c));
  }
  return cases;
}

}  // namespace r2c::testing
