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

#include "r2c/types.hpp"

namespace r2c {

// One JSON object (single line) describing how a prompt was compressed:
// budgets, per-chunk decisions, token accounting, flags and timings.
std::string audit_record(const CompressionResult& result,
                         std::string_view prompt_id);

}  // namespace r2c
