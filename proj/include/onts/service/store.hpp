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

#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "onts/feedio/news_item.hpp"

namespace onts::service {

nlohmann::json to_json(const NewsItem& item);
// Throws onts::Error on missing or mistyped fields.
NewsItem news_item_from_json(const nlohmann::json& j);

// Seconds since the Unix epoch for an RFC 822 date ("Mon, 03 Oct 2011
// 10:00:00 GMT", numeric zones, optional weekday and seconds), or nullopt.
std::optional<std::int64_t> parse_rfc822(std::string_view date);

// Append-only newline-delimited JSON file of items keyed by id. One writer at
// a time; readers see a consistent snapshot. An empty path keeps items in
// memory only.
class ArticleStore {
 public:
  // Loads existing records. Throws onts::ParseError with the line number of a
  // corrupt record.
  explicit ArticleStore(std::string path = {});

  // False (and nothing written) when the id is already stored.
  bool add(const NewsItem& item);
  bool contains(std::string_view id) const;
  std::optional<NewsItem> find(std::string_view id) const;
  std::size_t size() const;

  // Items whose categories contain `topic` and whose source_lang is `lang`
  // ("*" or empty: any), newest pub_date first; undated items after dated
  // ones, later insertions first.
  std::vector<NewsItem> list(std::string_view topic, std::string_view lang) const;
  // topic -> item count
  std::vector<std::pair<std::string, std::size_t>> topic_counts() const;

 private:
  std::string path_;
  mutable std::shared_mutex mutex_;
  std::vector<NewsItem> items_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace onts::service
