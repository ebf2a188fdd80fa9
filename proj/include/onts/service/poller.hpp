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

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "onts/service/pipeline.hpp"
#include "onts/service/store.hpp"

namespace onts::service {

using Clock = std::chrono::system_clock;

inline constexpr unsigned kMinPollSeconds = 30;
inline constexpr unsigned kDefaultPollSeconds = 300;

struct FeedSubscription {
  std::string url;
  unsigned interval_seconds = kDefaultPollSeconds;
  std::optional<Clock::time_point> last_fetch;
  std::string language;  // used when the feed carries none

  // Throws onts::Error for an empty URL or an interval below 30 s.
  void validate() const;
  bool due(Clock::time_point now) const;
};

// {"url": ..., "interval": 300, "lang": "de"}; throws onts::Error.
FeedSubscription subscription_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FeedSubscription& s);

struct FeedReport {
  std::string url;
  std::size_t new_items = 0;
  std::size_t duplicates = 0;
  std::size_t errors = 0;  // fetch/parse failure counts 1; plus skipped items
  std::string message;
};

// Returns the response body or throws on any transport or HTTP failure.
using Fetcher = std::function<std::string(const std::string& url)>;

// Plain-HTTP GET (https is not supported); non-2xx statuses throw.
std::string http_fetch(const std::string& url);

// Fetches every due subscription, parses, categorizes source-side and stores
// new items. A failing feed is reported and does not stop the others. Fetched
// subscriptions get last_fetch = now.
std::vector<FeedReport> poll_feeds(std::vector<FeedSubscription>& subscriptions, ArticleStore& store,
                                   const Pipeline& pipeline, const Fetcher& fetch, Clock::time_point now);

// Subscriptions plus a background thread calling poll_feeds every tick.
class FeedPoller {
 public:
  FeedPoller(ArticleStore& store, const Pipeline& pipeline, Fetcher fetch = http_fetch);
  ~FeedPoller();

  void subscribe(FeedSubscription s);
  std::vector<FeedSubscription> subscriptions() const;
  std::vector<FeedReport> poll_now(Clock::time_point now = Clock::now());

  void start(std::chrono::seconds tick);
  void stop();

 private:
  ArticleStore& store_;
  const Pipeline& pipeline_;
  Fetcher fetch_;
  mutable std::mutex mutex_;
  std::mutex poll_mutex_;
  std::vector<FeedSubscription> subscriptions_;
  std::thread thread_;
  std::condition_variable wake_;
  bool stopping_ = false;
};

}  // namespace onts::service
