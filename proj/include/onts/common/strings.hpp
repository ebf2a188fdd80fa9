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

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace onts {

// Splits on runs of ASCII whitespace; no empty fields.
std::vector<std::string> split_whitespace(std::string_view s);

// Splits on every occurrence of `sep`; keeps empty fields.
std::vector<std::string> split(std::string_view s, std::string_view sep);

std::string join(std::span<const std::string> parts, std::string_view sep);

std::string_view trim(std::string_view s);

bool is_space(char c);

// Whole file as bytes; throws onts::Error when unreadable.
std::string read_file(const std::string& path);

}  // namespace onts
