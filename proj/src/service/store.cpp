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

#include "onts/service/store.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>

#include "onts/common/error.hpp"
#include "onts/common/strings.hpp"

namespace onts::service {

nlohmann::json to_json(const NewsItem& item) {
  nlohmann::json j{{"id", item.id},
                   {"source_lang", item.source_lang},
                   {"title", item.title},
                   {"body", item.body},
                   {"pub_date", item.pub_date},
                   {"source_url", item.source_url},
                   {"categories", item.categories}};
  if (item.enrichment) {
    const auto& e = *item.enrichment;
    j["enrichment"] = {{"translated_title", e.translated_title},
                       {"translated_body", e.translated_body},
                       {"ms_per_char", e.ms_per_char},
                       {"unknown_words", e.unknown_words},
                       {"engine_ids", {e.engine_ids.first, e.engine_ids.second}}};
  }
  if (item.error) j["error"] = *item.error;
  return j;
}

NewsItem news_item_from_json(const nlohmann::json& j) {
  try {
    NewsItem item;
    item.id = j.at("id").get<std::string>();
    item.source_lang = j.at("source_lang").get<std::string>();
    item.title = j.at("title").get<std::string>();
    item.body = j.value("body", "");
    item.pub_date = j.value("pub_date", "");
    item.source_url = j.value("source_url", "");
    item.categories = j.value("categories", std::vector<std::string>{});
    if (const auto it = j.find("enrichment"); it != j.end()) {
      Enrichment e;
      e.translated_title = it->at("translated_title").get<std::string>();
      e.translated_body = it->at("translated_body").get<std::string>();
      e.ms_per_char = it->at("ms_per_char").get<double>();
      e.unknown_words = it->value("unknown_words", std::vector<std::string>{});
      const auto ids = it->value("engine_ids", std::vector<std::string>{"", ""});
      if (ids.size() != 2) throw Error("engine_ids must have two entries");
      e.engine_ids = {ids[0], ids[1]};
      item.enrichment = std::move(e);
    }
    if (const auto it = j.find("error"); it != j.end()) item.error = it->get<std::string>();
    return item;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad item record: ") + e.what());
  }
}

namespace {

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<int> month_index(std::string_view m) {
  static constexpr std::array<std::string_view, 12> kMonths = {"Jan", "Feb", "Mar", "Apr", "May", "Jun",
                                                               "Jul", "Aug", "Sep", "Oct", "Nov", "Dec"};
  for (std::size_t i = 0; i < kMonths.size(); ++i)
    if (kMonths[i] == m) return static_cast<int>(i) + 1;
  return std::nullopt;
}

// Offset from UTC in minutes.
std::optional<int> zone_offset(std::string_view z) {
  if (z == "GMT" || z == "UT" || z == "UTC" || z == "Z") return 0;
  static const std::map<std::string_view, int> kNamed = {{"EST", -300}, {"EDT", -240}, {"CST", -360},
                                                         {"CDT", -300}, {"MST", -420}, {"MDT", -360},
                                                         {"PST", -480}, {"PDT", -420}};
  if (const auto it = kNamed.find(z); it != kNamed.end()) return it->second;
  if (z.size() == 5 && (z[0] == '+' || z[0] == '-')) {
    const auto hh = to_int(z.substr(1, 2));
    const auto mm = to_int(z.substr(3, 2));
    if (!hh || !mm || *mm >= 60) return std::nullopt;
    const int minutes = *hh * 60 + *mm;
    return z[0] == '-' ? -minutes : minutes;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::int64_t> parse_rfc822(std::string_view date) {
  auto parts = split_whitespace(date);
  if (!parts.empty() && parts[0].back() == ',') parts.erase(parts.begin());
  if (parts.size() != 5) return std::nullopt;
  const auto day = to_int(parts[0]);
  const auto month = month_index(parts[1]);
  auto year = to_int(parts[2]);
  const auto offset = zone_offset(parts[4]);
  if (!day || !month || !year || !offset) return std::nullopt;
  if (parts[2].size() == 2) *year += *year < 50 ? 2000 : 1900;
  const auto hms = split(parts[3], ":");
  if (hms.size() != 2 && hms.size() != 3) return std::nullopt;
  const auto h = to_int(hms[0]);
  const auto m = to_int(hms[1]);
  const auto s = hms.size() == 3 ? to_int(hms[2]) : std::optional<int>(0);
  if (!h || !m || !s || *h > 23 || *m > 59 || *s > 60) return std::nullopt;
  const std::chrono::year_month_day ymd{std::chrono::year(*year), std::chrono::month(static_cast<unsigned>(*month)),
                                        std::chrono::day(static_cast<unsigned>(*day))};
  if (!ymd.ok()) return std::nullopt;
  const auto days = std::chrono::sys_days(ymd).time_since_epoch().count();
  return static_cast<std::int64_t>(days) * 86400 + *h * 3600 + *m * 60 + *s - static_cast<std::int64_t>(*offset) * 60;
}

ArticleStore::ArticleStore(std::string path) : path_(std::move(path)) {
  if (path_.empty()) return;
  std::ifstream in(path_);
  if (!in) return;  // created on first add
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    NewsItem item;
    try {
      item = news_item_from_json(nlohmann::json::parse(line));
    } catch (const std::exception& e) {
      throw ParseError(path_ + ": " + e.what(), line_no, 1);
    }
    // Later records for an id replace earlier ones.
    if (const auto it = index_.find(item.id); it != index_.end()) {
      items_[it->second] = std::move(item);
    } else {
      index_.emplace(item.id, items_.size());
      items_.push_back(std::move(item));
    }
  }
}

bool ArticleStore::add(const NewsItem& item) {
  std::unique_lock lock(mutex_);
  if (index_.count(item.id)) return false;
  if (!path_.empty()) {
    std::ofstream out(path_, std::ios::app);
    out << to_json(item).dump() << '\n';
    if (!out) throw Error("cannot append to " + path_);
  }
  index_.emplace(item.id, items_.size());
  items_.push_back(item);
  return true;
}

bool ArticleStore::contains(std::string_view id) const {
  std::shared_lock lock(mutex_);
  return index_.count(std::string(id)) > 0;
}

std::optional<NewsItem> ArticleStore::find(std::string_view id) const {
  std::shared_lock lock(mutex_);
  const auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return items_[it->second];
}

std::size_t ArticleStore::size() const {
  std::shared_lock lock(mutex_);
  return items_.size();
}

std::vector<NewsItem> ArticleStore::list(std::string_view topic, std::string_view lang) const {
  struct Hit {
    std::optional<std::int64_t> time;
    std::size_t position;
  };
  std::vector<Hit> hits;
  std::shared_lock lock(mutex_);
  for (std::size_t i = 0; i < items_.size(); ++i) {
    const auto& item = items_[i];
    if (!lang.empty() && lang != "*" && item.source_lang != lang) continue;
    if (std::find(item.categories.begin(), item.categories.end(), topic) == item.categories.end()) continue;
    hits.push_back({parse_rfc822(item.pub_date), i});
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
    if (a.time.has_value() != b.time.has_value()) return a.time.has_value();
    if (a.time && *a.time != *b.time) return *a.time > *b.time;
    return a.position > b.position;
  });
  std::vector<NewsItem> out;
  out.reserve(hits.size());
  for (const auto& h : hits) out.push_back(items_[h.position]);
  return out;
}

std::vector<std::pair<std::string, std::size_t>> ArticleStore::topic_counts() const {
  std::map<std::string, std::size_t> counts;
  std::shared_lock lock(mutex_);
  for (const auto& item : items_)
    for (const auto& c : item.categories) ++counts[c];
  return {counts.begin(), counts.end()};
}

}  // namespace onts::service
