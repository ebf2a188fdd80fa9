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

#include "onts/service/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <filesystem>

#include "onts/common/error.hpp"

namespace onts::service {

namespace {

namespace fs = std::filesystem;
namespace pt = boost::property_tree;

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "on" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "off" || value == "no") return false;
  throw Error("config: " + key + " must be a boolean, got '" + value + "'");
}

}  // namespace

ServiceConfig ServiceConfig::load(const std::string& path) {
  pt::ptree tree;
  try {
    pt::read_ini(path, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ParseError("config: " + e.message(), e.line(), 1);
  }
  const fs::path base = fs::path(path).parent_path();
  auto resolve = [&](const std::string& p) -> std::string {
    if (p.empty()) return p;
    return (base / p).lexically_normal().string();
  };
  auto path_at = [&](const char* key) { return resolve(tree.get<std::string>(key, "")); };

  ServiceConfig c;
  c.engines_manifest = path_at("engines.manifest");
  if (c.engines_manifest.empty()) throw Error("config: [engines] manifest is required");
  c.abbreviations_dir = path_at("resources.abbreviations");
  c.lexicons_dir = path_at("resources.lexicons");
  c.categories_dir = path_at("resources.categories");
  c.repository_path = path_at("resources.repository");
  c.recase_corpus = path_at("resources.recase_corpus");
  if (const auto compound = tree.get_child_optional("compound"))
    for (const auto& [lang, value] : *compound) c.compound_corpora[lang] = resolve(value.data());

  if (const auto toggles = tree.get_child_optional("toggles")) {
    for (const auto& [key, value] : *toggles) {
      const bool on = parse_bool(key, value.data());
      if (key == "named_entity") c.toggles.named_entity = on;
      else if (key == "compound") c.toggles.compound = on;
      else if (key == "recaser") c.toggles.recaser = on;
      else if (key == "detokenizer") c.toggles.detokenizer = on;
      else if (key == "unknown_words") c.toggles.unknown_words = on;
      else throw Error("config: unknown toggle '" + key + "'");
    }
  }
  try {
    const long workers = tree.get<long>("pool.workers", 4);
    if (workers < 1) throw Error("config: [pool] workers must be at least 1");
    c.workers = static_cast<std::size_t>(workers);
    c.store_path = path_at("store.path");
    c.host = tree.get<std::string>("server.host", c.host);
    c.port = tree.get<int>("server.port", c.port);
    const long tick = tree.get<long>("poller.tick_seconds", c.poll_tick_seconds);
    if (tick < 1) throw Error("config: [poller] tick_seconds must be at least 1");
    c.poll_tick_seconds = static_cast<unsigned>(tick);
  } catch (const pt::ptree_error& e) {
    throw Error(std::string("config: ") + e.what());
  }
  return c;
}

}  // namespace onts::service
