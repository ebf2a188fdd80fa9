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

#include "onts/entities/similarity.hpp"

#include <algorithm>
#include <vector>

#include "onts/common/unicode.hpp"

namespace onts::entities {

namespace {

std::u32string decode(std::string_view s) {
  std::u32string out;
  const auto offsets = unicode::char_offsets(s);
  for (std::size_t i = 0; i + 1 < offsets.size(); ++i)
    out += unicode::first_char(s.substr(offsets[i], offsets[i + 1] - offsets[i]));
  return out;
}

}  // namespace

std::u32string normalize_name(std::string_view name) {
  const std::u32string plain = decode(unicode::strip_diacritics(unicode::to_lower(name)));
  std::u32string mapped;
  mapped.reserve(plain.size());
  for (std::size_t i = 0; i < plain.size(); ++i) {
    const char32_t c = plain[i];
    const char32_t next = i + 1 < plain.size() ? plain[i + 1] : 0;
    if (c == U'p' && next == U'h') {
      mapped += U'f';
      ++i;
    } else if ((c == U'd' || c == U'g') && next == U'h') {
      mapped += c;
      ++i;
    } else if (c == U'q') {
      mapped += U'k';
    } else if (c == U'w') {
      mapped += U'v';
    } else {
      mapped += c;
    }
  }
  std::u32string collapsed;
  for (char32_t c : mapped) {
    if (!collapsed.empty() && collapsed.back() == c && c != U' ') continue;
    collapsed += c;
  }
  return collapsed;
}

std::size_t edit_distance(std::u32string_view a, std::u32string_view b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

double similarity(std::string_view a, std::string_view b) {
  const auto na = normalize_name(a);
  const auto nb = normalize_name(b);
  const std::size_t longest = std::max(na.size(), nb.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(edit_distance(na, nb)) / static_cast<double>(longest);
}

}  // namespace onts::entities
