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

#include "onts/service/poller.hpp"

#include <spdlog/spdlog.h>

#include "onts/common/error.hpp"
#include "onts/feedio/rss.hpp"

namespace onts::service {

void FeedSubscription::validate() const {
  if (url.empty()) throw Error("feed subscription needs a url");
  if (interval_seconds < kMinPollSeconds)
    throw Error("poll interval must be at least " + std::to_string(kMinPollSeconds) + " s, got " +
                std::to_string(interval_seconds));
}

bool FeedSubscription::due(Clock::time_point now) const {
  return !last_fetch || now - *last_fetch >= std::chrono::seconds(interval_seconds);
}

FeedSubscription subscription_from_json(const nlohmann::json& j) {
  FeedSubscription s;
  try {
    if (!j.is_object()) throw Error("feed subscription must be a JSON object");
    s.url = j.at("url").get<std::string>();
    const auto interval = j.value("interval", static_cast<long>(kDefaultPollSeconds));
    if (interval < 0) throw Error("poll interval must be non-negative");
    s.interval_seconds = static_cast<unsigned>(interval);
    s.language = j.value("lang", "");
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad feed subscription: ") + e.what());
  }
  s.validate();
  return s;
}

nlohmann::json to_json(const FeedSubscription& s) {
  nlohmann::json j{{"url", s.url}, {"interval", s.interval_seconds}, {"lang", s.language}};
  if (s.last_fetch)
    j["last_fetch"] = std::chrono::duration_cast<std::chrono::seconds>(s.last_fetch->time_since_epoch()).count();
  return j;
}

std::vector<FeedReport> poll_feeds(std::vector<FeedSubscription>& subscriptions, ArticleStore& store,
                                   const Pipeline& pipeline, const Fetcher& fetch, Clock::time_point now) {
  std::vector<FeedReport> reports;
  for (auto& sub : subscriptions) {
    if (!sub.due(now)) continue;
    sub.last_fetch = now;
    FeedReport report;
    report.url = sub.url;
    try {
      const auto feed = feedio::parse_rss(fetch(sub.url), sub.language);
      for (auto item : feed.items) {
        if (store.contains(item.id)) {
          ++report.duplicates;
          continue;
        }
        item.enrichment.reset();
        pipeline.categorize(item);
        if (store.add(item)) {
          ++report.new_items;
        } else {
          ++report.duplicates;
        }
      }
      report.errors += feed.skipped.size();
      for (const auto& skip : feed.skipped)
        spdlog::warn("feed {} item {} skipped: {}", sub.url, skip.item_index, skip.reason);
    } catch (const std::exception& e) {
      ++report.errors;
      report.message = e.what();
      spdlog::error("feed {} failed: {}", sub.url, e.what());
    }
    spdlog::info("feed {} new={} duplicates={} errors={}", sub.url, report.new_items, report.duplicates,
                 report.errors);
    reports.push_back(std::move(report));
  }
  return reports;
}

FeedPoller::FeedPoller(ArticleStore& store, const Pipeline& pipeline, Fetcher fetch)
    : store_(store), pipeline_(pipeline), fetch_(std::move(fetch)) {}

FeedPoller::~FeedPoller() { stop(); }

void FeedPoller::subscribe(FeedSubscription s) {
  s.validate();
  std::lock_guard lock(mutex_);
  for (auto& existing : subscriptions_) {
    if (existing.url == s.url) {
      existing.interval_seconds = s.interval_seconds;
      existing.language = s.language;
      return;
    }
  }
  subscriptions_.push_back(std::move(s));
}

std::vector<FeedSubscription> FeedPoller::subscriptions() const {
  std::lock_guard lock(mutex_);
  return subscriptions_;
}

std::vector<FeedReport> FeedPoller::poll_now(Clock::time_point now) {
  // Fetch outside the subscription lock so subscribe() stays responsive.
  std::lock_guard poll_lock(poll_mutex_);
  std::vector<FeedSubscription> due;
  {
    std::lock_guard lock(mutex_);
    due = subscriptions_;
  }
  auto reports = poll_feeds(due, store_, pipeline_, fetch_, now);
  std::lock_guard lock(mutex_);
  for (const auto& polled : due)
    for (auto& sub : subscriptions_)
      if (sub.url == polled.url) sub.last_fetch = polled.last_fetch;
  return reports;
}

void FeedPoller::start(std::chrono::seconds tick) {
  stop();
  {
    std::lock_guard lock(mutex_);
    stopping_ = false;
  }
  thread_ = std::thread([this, tick] {
    std::unique_lock lock(mutex_);
    while (!stopping_) {
      lock.unlock();
      poll_now();
      lock.lock();
      wake_.wait_for(lock, tick, [this] { return stopping_; });
    }
  });
}

void FeedPoller::stop() {
  {
    std::lock_guard lock(mutex_);
    stopping_ = true;
  }
  wake_.notify_all();
  if (thread_.joinable()) thread_.join();
}

}  // namespace onts::service
