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

#include <string>
#include <string_view>

namespace onts::entities {

// Lowercase, strip diacritics, rewrite ph->f q->k w->v dh->d gh->g, then
// collapse doubled letters.
std::u32string normalize_name(std::string_view name);

// Levenshtein distance over code points.
std::size_t edit_distance(std::u32string_view a, std::u32string_view b);

// 1 - editDistance(a', b') / max(|a'|, |b'|) over normalized forms; symmetric,
// 1 for identical names, always in [0, 1].
double similarity(std::string_view a, std::string_view b);

}  // namespace onts::entities
