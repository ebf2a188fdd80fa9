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

#include <cstddef>
#include <map>
#include <string>

namespace onts::service {

struct PipelineToggles {
  bool named_entity = true;
  bool compound = true;
  bool recaser = true;
  bool detokenizer = true;
  bool unknown_words = true;

  bool operator==(const PipelineToggles&) const = default;
};

// One INI file. Relative paths resolve against the file's directory.
//
//   [engines]     manifest = engines.ini
//   [resources]   abbreviations = dir with <lang>.txt
//                 lexicons = dir with <lang>/<class>.txt
//                 categories = dir with <lang>/<id> definitions
//                 repository = entity TSV
//                 recase_corpus = cased target-language text, one sentence per line
//   [compound]    <lang> = monolingual corpus for the splitter (only listed langs split)
//   [toggles]     named_entity, compound, recaser, detokenizer, unknown_words
//   [pool]        workers = 4
//   [store]       path = articles.ndjson
//   [server]      host = 127.0.0.1, port = 8080
//   [poller]      tick_seconds = 30
struct ServiceConfig {
  std::string engines_manifest;
  std::string abbreviations_dir;
  std::string lexicons_dir;
  std::string categories_dir;
  std::string repository_path;
  std::string recase_corpus;
  std::map<std::string, std::string> compound_corpora;
  PipelineToggles toggles;
  std::size_t workers = 4;
  std::string store_path;
  std::string host = "127.0.0.1";
  int port = 8080;
  unsigned poll_tick_seconds = 30;

  // Throws onts::Error for unreadable files, unknown booleans or bad numbers.
  static ServiceConfig load(const std::string& path);
};

}  // namespace onts::service
