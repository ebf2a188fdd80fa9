// Copyright 2026 The ONTS Authors.
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
#include <string>
#include <vector>

namespace onts {

// A source token range [start, end) whose translation is fixed to
// `forced_target`.
struct ConstrainedSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::vector<std::string> forced_target;

  bool operator==(const ConstrainedSpan&) const = default;
};

}  // namespace onts
