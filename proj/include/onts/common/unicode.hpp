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
#include <string_view>
#include <vector>

// UTF-8 helpers shared by the text modules. Case mapping is per code point
// (no locale-specific expansions such as German sharp s to "SS").
namespace onts::unicode {

bool is_valid_utf8(std::string_view s);

// Number of code points. Invalid sequences count one per byte.
std::size_t char_count(std::string_view s);

// Byte offsets of every code point start, plus s.size() as a sentinel.
std::vector<std::size_t> char_offsets(std::string_view s);

std::string to_lower(std::string_view s);
std::string to_upper(std::string_view s);

// Uppercases the first code point and leaves the rest untouched.
std::string capitalize(std::string_view s);

bool has_upper(std::string_view s);
bool starts_upper(std::string_view s);
bool is_alphabetic(std::string_view s);  // non-empty and letters only
bool has_alpha(std::string_view s);
bool is_digits(std::string_view s);      // non-empty and decimal digits only

// Canonical decomposition with combining marks removed ("é" -> "e").
std::string strip_diacritics(std::string_view s);

// First code point of s, or U+FFFD when s is empty/invalid.
char32_t first_char(std::string_view s);
char32_t last_char(std::string_view s);

std::string encode(char32_t cp);

}  // namespace onts::unicode
