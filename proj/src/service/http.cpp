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

#include "onts/service/http.hpp"

#include <httplib.h>
#include <spdlog/spdlog.h>

#include "onts/common/error.hpp"
#include "onts/feedio/rss.hpp"

namespace onts::service {

namespace {

Response json_response(int status, const nlohmann::json& j) {
  return {status, "application/json", j.dump()};
}

Response error_response(int status, const std::string& message) {
  return json_response(status, {{"error", message}});
}

std::optional<std::string> param(const QueryParams& query, const std::string& key) {
  const auto it = query.find(key);
  if (it == query.end()) return std::nullopt;
  return it->second;
}

const char* kRssType = "application/rss+xml; charset=utf-8";

}  // namespace

Endpoints::Endpoints(const Pipeline& pipeline, ArticleStore& store, FeedPoller& poller, PipelineToggles defaults)
    : pipeline_(pipeline), store_(store), poller_(poller), defaults_(defaults) {}

PipelineToggles Endpoints::toggles_from(const QueryParams& query) const {
  PipelineToggles t = defaults_;
  const std::pair<const char*, bool*> keys[] = {{"ne", &t.named_entity},
                                                {"compound", &t.compound},
                                                {"recase", &t.recaser},
                                                {"detok", &t.detokenizer},
                                                {"unk", &t.unknown_words}};
  for (const auto& [key, flag] : keys) {
    const auto v = param(query, key);
    if (!v) continue;
    if (*v == "1") *flag = true;
    else if (*v == "0") *flag = false;
    else throw Error(std::string("query parameter ") + key + " must be 0 or 1, got '" + *v + "'");
  }
  return t;
}

Response Endpoints::translate(const std::string& body, const QueryParams& query) const {
  PipelineToggles toggles;
  try {
    toggles = toggles_from(query);
  } catch (const Error& e) {
    return error_response(400, e.what());
  }
  const auto src = param(query, "src").value_or("");
  feedio::ParsedFeed feed;
  try {
    feed = feedio::parse_rss(body, src);
  } catch (const ParseError& e) {
    return error_response(400, std::string("request body is not RSS: ") + e.what() + " at byte " +
                                   std::to_string(e.offset()));
  }
  if (!src.empty())
    for (auto& item : feed.items) item.source_lang = src;
  auto items = pipeline_.process_batch(std::move(feed.items), toggles);
  for (const auto& skip : feed.skipped) {
    NewsItem failed;
    failed.title = skip.title;
    failed.id = feedio::item_id("", skip.title);
    failed.error = skip.reason;
    items.push_back(std::move(failed));
  }
  return {200, kRssType, feedio::emit_rss(items, {feedio::EmitMode::kTranslated})};
}

Response Endpoints::articles(const QueryParams& query) const {
  const auto topic = param(query, "topic").value_or("");
  const auto lang = param(query, "lang").value_or("*");
  const auto items = store_.list(topic, lang);
  feedio::EmitOptions options;
  options.channel_title = "ONTS articles: " + topic;
  return {200, kRssType, feedio::emit_rss(items, options)};
}

Response Endpoints::add_feed(const std::string& body) {
  try {
    auto sub = subscription_from_json(nlohmann::json::parse(body));
    poller_.subscribe(sub);
    return json_response(201, to_json(sub));
  } catch (const nlohmann::json::exception& e) {
    return error_response(400, std::string("request body is not JSON: ") + e.what());
  } catch (const Error& e) {
    return error_response(400, e.what());
  }
}

Response Endpoints::topics() const {
  std::map<std::string, std::size_t> counts;
  for (const auto& id : pipeline_.topics()) counts[id] = 0;
  for (const auto& [id, n] : store_.topic_counts()) counts[id] = n;
  auto j = nlohmann::json::array();
  for (const auto& [id, n] : counts) j.push_back({{"id", id}, {"count", n}});
  return json_response(200, j);
}

Response Endpoints::health() const {
  return json_response(200, {{"status", "ok"},
                             {"articles", store_.size()},
                             {"languages", pipeline_.engines().languages()},
                             {"feeds", poller_.subscriptions().size()}});
}

std::string http_fetch(const std::string& url) {
  constexpr std::string_view kScheme = "http://";
  if (!url.starts_with(kScheme)) throw Error("only http:// feeds are supported: " + url);
  const auto slash = url.find('/', kScheme.size());
  const std::string host = url.substr(kScheme.size(), slash == std::string::npos ? std::string::npos : slash - kScheme.size());
  const std::string path = slash == std::string::npos ? "/" : url.substr(slash);
  httplib::Client client("http://" + host);
  client.set_connection_timeout(5);
  client.set_read_timeout(15);
  client.set_follow_location(true);
  const auto res = client.Get(path);
  if (!res) throw Error("fetch " + url + " failed: " + httplib::to_string(res.error()));
  if (res->status < 200 || res->status >= 300) throw Error("fetch " + url + " returned HTTP " + std::to_string(res->status));
  return res->body;
}

struct HttpServer::Impl {
  httplib::Server server;
};

namespace {

QueryParams query_of(const httplib::Request& req) { return {req.params.begin(), req.params.end()}; }

void reply(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_content(r.body, r.content_type);
}

}  // namespace

HttpServer::HttpServer(Endpoints& endpoints) : impl_(std::make_unique<Impl>()) {
  auto& s = impl_->server;
  s.Post("/translate", [&endpoints](const httplib::Request& req, httplib::Response& res) {
    reply(res, endpoints.translate(req.body, query_of(req)));
  });
  s.Get("/articles", [&endpoints](const httplib::Request& req, httplib::Response& res) {
    reply(res, endpoints.articles(query_of(req)));
  });
  s.Post("/feeds", [&endpoints](const httplib::Request& req, httplib::Response& res) {
    reply(res, endpoints.add_feed(req.body));
  });
  s.Get("/topics", [&endpoints](const httplib::Request&, httplib::Response& res) { reply(res, endpoints.topics()); });
  s.Get("/health", [&endpoints](const httplib::Request&, httplib::Response& res) { reply(res, endpoints.health()); });
  s.set_payload_max_length(CPPHTTPLIB_FORM_URL_ENCODED_PAYLOAD_MAX_LENGTH);
  // The browser console is served from another origin.
  s.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
  s.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  s.set_exception_handler([](const httplib::Request& req, httplib::Response& res, std::exception_ptr ep) {
    std::string message = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      message = e.what();
    } catch (...) {
    }
    spdlog::error("{} {} failed: {}", req.method, req.path, message);
    reply(res, error_response(500, message));
  });
  s.set_logger([](const httplib::Request& req, const httplib::Response& res) {
    spdlog::info("{} {} -> {}", req.method, req.path, res.status);
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  auto& s = impl_->server;
  if (port == 0) {
    const int bound = s.bind_to_any_port(host);
    if (bound < 0) throw Error("cannot bind " + host);
    return bound;
  }
  if (!s.bind_to_port(host, port)) throw Error("cannot bind " + host + ":" + std::to_string(port));
  return port;
}

void HttpServer::serve() { impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace onts::service
