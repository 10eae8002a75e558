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
#include <string_view>
#include <vector>

namespace r2c::eval {

// Target-model prompt for one task. `text` holds the placeholders
// {context} and, for most tasks, {question}.
struct PromptTemplate {
  std::string_view task;
  std::string_view text;
};

// Throws ConfigError for unknown tasks.
const PromptTemplate& template_for(std::string_view task);
std::vector<std::string_view> known_tasks();

std::string render_prompt(const PromptTemplate& tmpl, std::string_view context,
                          std::string_view question);

// The template with both placeholders removed: the fixed instruction text
// that surrounds context and question.
std::string template_framing(const PromptTemplate& tmpl);

}  // namespace r2c::eval
