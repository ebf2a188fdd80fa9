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
#include <mutex>
#include <string>
#include <vector>

#include "onts/categorizer/category.hpp"
#include "onts/common/thread_pool.hpp"
#include "onts/decoder/engine.hpp"
#include "onts/entities/recognizer.hpp"
#include "onts/entities/repository.hpp"
#include "onts/feedio/news_item.hpp"
#include "onts/service/config.hpp"
#include "onts/textprep/compound.hpp"
#include "onts/textprep/recaser.hpp"
#include "onts/textprep/tokenizer.hpp"

namespace onts::service {

// Everything the pipeline reads. Immutable once handed to a Pipeline, except
// the repository, which is swapped as a whole.
struct PipelineResources {
  decoder::EngineRegistry engines;
  std::map<std::string, textprep::Tokenizer> tokenizers;  // by source lang; default for others
  std::map<std::string, entities::TriggerLexicon> lexicons;
  std::vector<categorizer::CategoryDef> categories;
  std::shared_ptr<const entities::EntityRepository> repository;
  std::map<std::string, textprep::FrequencyTable> compound_tables;  // langs that split
  textprep::RecaseModel recase_model;

  static PipelineResources load(const ServiceConfig& config);
};

// Source-side view of one sentence, ready for decoding.
struct PreparedSentence {
  std::vector<std::string> tokens;   // decoder input
  std::vector<std::string> surface;  // original casing per decoder token
  std::vector<ConstrainedSpan> spans;
};

struct SentenceOutput {
  std::string text;
  std::vector<std::string> unknown_words;
};

class Pipeline {
 public:
  Pipeline(PipelineResources resources, std::size_t workers);

  // Assigns categories from the cased source text, then translates the title
  // with the title engine and each body sentence with the content engine.
  // Per sentence: tokenize, entity spans (named_entity), lowercase outside
  // spans, compound split outside spans (compound, listed langs), decode,
  // recase (recaser), detokenize (detokenizer, else space-join). Sentences
  // run on the worker pool and are reassembled in order. ms_per_char is the
  // wall time of that translation stage over the code points of title + body.
  // Throws onts::Error for a missing engine or empty title.
  NewsItem process_item(NewsItem item, const PipelineToggles& toggles) const;

  // Runs process_item on `concurrency` article threads (sentences still share
  // the worker pool). A failing item comes back with its source fields, no
  // enrichment and the message in `error`; the others are unaffected.
  std::vector<NewsItem> process_batch(std::vector<NewsItem> items, const PipelineToggles& toggles,
                                      std::size_t concurrency = 1) const;

  // Source-side categories, sorted. Also stored on the item.
  std::vector<std::string> categorize(NewsItem& item) const;

  PreparedSentence prepare(std::string_view sentence, std::string_view lang, const PipelineToggles& toggles) const;
  SentenceOutput translate_sentence(const PreparedSentence& sentence, const decoder::TranslationEngine& engine,
                                    const PipelineToggles& toggles) const;

  const decoder::EngineRegistry& engines() const { return resources_.engines; }
  const std::vector<categorizer::CategoryDef>& categories() const { return resources_.categories; }
  std::vector<std::string> topics() const;
  const textprep::Tokenizer& tokenizer(std::string_view lang) const;

  std::shared_ptr<const entities::EntityRepository> repository() const;
  void replace_repository(std::shared_ptr<const entities::EntityRepository> repo);

 private:
  PipelineResources resources_;
  textprep::Tokenizer default_tokenizer_;
  mutable std::mutex repository_mutex_;
  mutable ThreadPool pool_;
};

}  // namespace onts::service
