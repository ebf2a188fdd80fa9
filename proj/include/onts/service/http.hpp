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

#include <map>
#include <memory>
#include <string>

#include "onts/service/config.hpp"
#include "onts/service/pipeline.hpp"
#include "onts/service/poller.hpp"
#include "onts/service/store.hpp"

namespace onts::service {

using QueryParams = std::multimap<std::string, std::string>;

struct Response {
  int status = 200;
  std::string content_type;
  std::string body;
};

// Endpoint logic, independent of the HTTP library.
//   POST /translate  RSS body; query ne, compound, recase, detok, unk in {0,1}; src
//   GET  /articles   topic, lang ("*" or absent: any); RSS
//   POST /feeds      subscription JSON
//   GET  /topics     JSON [{"id", "count"}]
//   GET  /health     JSON
class Endpoints {
 public:
  Endpoints(const Pipeline& pipeline, ArticleStore& store, FeedPoller& poller, PipelineToggles defaults);

  Response translate(const std::string& body, const QueryParams& query) const;
  Response articles(const QueryParams& query) const;
  Response add_feed(const std::string& body);
  Response topics() const;
  Response health() const;

  // Toggle defaults overridden by query parameters; throws onts::Error for a
  // value other than 0 or 1.
  PipelineToggles toggles_from(const QueryParams& query) const;

 private:
  const Pipeline& pipeline_;
  ArticleStore& store_;
  FeedPoller& poller_;
  PipelineToggles defaults_;
};

// HTTP/1.1 server over Endpoints.
class HttpServer {
 public:
  explicit HttpServer(Endpoints& endpoints);
  ~HttpServer();

  // Binds (port 0: any free port) and returns the bound port; throws on failure.
  int bind(const std::string& host, int port);
  // Serves until stop(); call after bind().
  void serve();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace onts::service
