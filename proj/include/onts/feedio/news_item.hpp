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

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace onts {

// Translation output attached to an article.
struct Enrichment {
  std::string translated_title;
  std::string translated_body;
  // Translation wall time in ms divided by the code-point count of title + body.
  double ms_per_char = 0.0;
  std::vector<std::string> unknown_words;
  // (title engine id, content engine id)
  std::pair<std::string, std::string> engine_ids;

  bool operator==(const Enrichment&) const = default;
};

struct NewsItem {
  std::string id;
  std::string source_lang;  // ISO-639-1
  std::string title;
  std::string body;
  std::string pub_date;  // RFC 822 date as carried by RSS; may be empty
  std::string source_url;
  std::vector<std::string> categories;
  std::optional<Enrichment> enrichment;
  // Per-item processing failure, carried as onts:error.
  std::optional<std::string> error;

  bool operator==(const NewsItem&) const = default;
};

}  // namespace onts
