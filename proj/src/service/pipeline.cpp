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

#include "onts/service/pipeline.hpp"

#include <spdlog/spdlog.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <memory>
#include <set>

#include "onts/common/error.hpp"
#include "onts/common/strings.hpp"
#include "onts/common/unicode.hpp"
#include "onts/decoder/translate.hpp"

namespace onts::service {

namespace {

namespace fs = std::filesystem;

std::vector<std::vector<std::string>> tokenized_lines(const std::string& path, const textprep::Tokenizer& tok,
                                                      bool lower) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    auto tokens = tok.tokenize(line).tokens;
    if (lower)
      for (auto& t : tokens) t = unicode::to_lower(t);
    out.push_back(std::move(tokens));
  }
  return out;
}

}  // namespace

PipelineResources PipelineResources::load(const ServiceConfig& config) {
  PipelineResources r;
  r.engines = decoder::EngineRegistry::load_manifest(config.engines_manifest);
  std::set<std::string> langs;
  for (const auto& l : r.engines.languages()) langs.insert(l);
  langs.insert("en");
  for (const auto& lang : langs) {
    if (!config.abbreviations_dir.empty()) {
      const auto path = fs::path(config.abbreviations_dir) / (lang + ".txt");
      if (fs::exists(path)) r.tokenizers.emplace(lang, textprep::Tokenizer(textprep::AbbreviationList::load(path.string())));
    }
    if (!config.lexicons_dir.empty() && fs::is_directory(fs::path(config.lexicons_dir) / lang))
      r.lexicons.emplace(lang, entities::TriggerLexicon::load(config.lexicons_dir, lang));
  }
  if (!config.categories_dir.empty()) r.categories = categorizer::load_definitions(config.categories_dir);
  if (config.repository_path.empty()) {
    r.repository = std::make_shared<entities::EntityRepository>();
  } else {
    std::ifstream in(config.repository_path);
    if (!in) throw Error("cannot open " + config.repository_path);
    r.repository = std::make_shared<entities::EntityRepository>(entities::EntityRepository::load(in));
  }
  auto tokenizer_for = [&](const std::string& lang) {
    const auto it = r.tokenizers.find(lang);
    return it == r.tokenizers.end() ? textprep::Tokenizer() : it->second;
  };
  for (const auto& [lang, corpus] : config.compound_corpora) {
    textprep::FrequencyTable table;
    table.add_corpus(tokenized_lines(corpus, tokenizer_for(lang), true));
    r.compound_tables.emplace(lang, std::move(table));
  }
  if (!config.recase_corpus.empty())
    r.recase_model = textprep::RecaseModel::train(tokenized_lines(config.recase_corpus, tokenizer_for("en"), false));
  return r;
}

Pipeline::Pipeline(PipelineResources resources, std::size_t workers)
    : resources_(std::move(resources)), pool_(std::max<std::size_t>(workers, 1)) {
  if (!resources_.repository) resources_.repository = std::make_shared<entities::EntityRepository>();
}

const textprep::Tokenizer& Pipeline::tokenizer(std::string_view lang) const {
  const auto it = resources_.tokenizers.find(std::string(lang));
  return it == resources_.tokenizers.end() ? default_tokenizer_ : it->second;
}

std::shared_ptr<const entities::EntityRepository> Pipeline::repository() const {
  std::lock_guard lock(repository_mutex_);
  return resources_.repository;
}

void Pipeline::replace_repository(std::shared_ptr<const entities::EntityRepository> repo) {
  if (!repo) throw Error("replacement repository is null");
  std::lock_guard lock(repository_mutex_);
  resources_.repository = std::move(repo);
}

std::vector<std::string> Pipeline::topics() const {
  std::set<std::string> ids;
  for (const auto& def : resources_.categories) ids.insert(def.id);
  return {ids.begin(), ids.end()};
}

std::vector<std::string> Pipeline::categorize(NewsItem& item) const {
  return categorizer::categorize(item, resources_.categories, tokenizer(item.source_lang));
}

PreparedSentence Pipeline::prepare(std::string_view sentence, std::string_view lang,
                                   const PipelineToggles& toggles) const {
  auto ts = tokenizer(lang).tokenize(sentence);
  std::vector<ConstrainedSpan> spans;
  if (toggles.named_entity) {
    const auto lex = resources_.lexicons.find(std::string(lang));
    const auto repo = repository();
    spans = entities::annotate_spans(ts, *repo, lang, lex == resources_.lexicons.end() ? nullptr : &lex->second);
    for (const auto& s : spans) ts.protected_spans.push_back({s.start, s.end, "entity"});
  }
  const auto lowered = textprep::lowercase_outside_spans(ts);

  PreparedSentence out;
  const auto table = toggles.compound ? resources_.compound_tables.find(std::string(lang))
                                      : resources_.compound_tables.end();
  if (table == resources_.compound_tables.end()) {
    out.tokens = lowered.tokens;
    out.surface = ts.tokens;
    out.spans = std::move(spans);
    return out;
  }
  // new_index[i] = position of original token i in the split sequence.
  std::vector<std::size_t> new_index(ts.tokens.size() + 1);
  for (std::size_t i = 0; i < ts.tokens.size(); ++i) {
    new_index[i] = out.tokens.size();
    if (ts.is_protected(i)) {
      out.tokens.push_back(lowered.tokens[i]);
      out.surface.push_back(ts.tokens[i]);
      continue;
    }
    auto parts = textprep::split_compound(lowered.tokens[i], table->second);
    if (parts.size() == 1) {
      out.tokens.push_back(lowered.tokens[i]);
      out.surface.push_back(ts.tokens[i]);
    } else {
      for (auto& p : parts) {
        out.surface.push_back(p);
        out.tokens.push_back(std::move(p));
      }
    }
  }
  new_index[ts.tokens.size()] = out.tokens.size();
  for (auto& s : spans) out.spans.push_back({new_index[s.start], new_index[s.end], std::move(s.forced_target)});
  return out;
}

SentenceOutput Pipeline::translate_sentence(const PreparedSentence& sentence, const decoder::TranslationEngine& engine,
                                            const PipelineToggles& toggles) const {
  SentenceOutput out;
  if (sentence.tokens.empty()) return out;
  const auto result = decoder::translate(sentence.tokens, sentence.spans, engine);
  std::vector<std::string> tokens;
  std::vector<char> keep;
  for (const auto& step : result.derivation) {
    if (step.origin == decoder::Origin::kUnknown) {
      for (std::size_t i = step.start; i < step.end; ++i) {
        tokens.push_back(sentence.surface[i]);
        keep.push_back(1);
        if (toggles.unknown_words) out.unknown_words.push_back(sentence.surface[i]);
      }
      continue;
    }
    for (const auto& t : step.target) {
      tokens.push_back(t);
      keep.push_back(step.origin == decoder::Origin::kForced);
    }
  }
  if (toggles.recaser) {
    std::unique_ptr<bool[]> flags(new bool[keep.size()]);
    for (std::size_t i = 0; i < keep.size(); ++i) flags[i] = keep[i] != 0;
    tokens = textprep::recase(tokens, resources_.recase_model, std::span<const bool>(flags.get(), keep.size()));
  }
  out.text = toggles.detokenizer ? textprep::detokenize(tokens) : join(tokens, " ");
  return out;
}

NewsItem Pipeline::process_item(NewsItem item, const PipelineToggles& toggles) const {
  if (trim(item.title).empty()) throw Error("item " + item.id + " has an empty title");
  categorize(item);
  const auto [title_engine, content_engine] = resources_.engines.route(item);

  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  std::vector<std::string> sentences = {item.title};
  for (auto& s : tokenizer(item.source_lang).split_sentences(item.body)) sentences.push_back(std::move(s));
  const auto outputs = pool_.map(sentences.size(), [&](std::size_t i) {
    const auto prepared = prepare(sentences[i], item.source_lang, toggles);
    return translate_sentence(prepared, i == 0 ? *title_engine : *content_engine, toggles);
  });

  Enrichment e;
  e.translated_title = outputs[0].text;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    if (i > 1) e.translated_body += ' ';
    if (i > 0) e.translated_body += outputs[i].text;
    for (const auto& w : outputs[i].unknown_words)
      if (seen.insert(w).second) e.unknown_words.push_back(w);
  }
  const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  const std::size_t chars = unicode::char_count(item.title) + unicode::char_count(item.body);
  e.ms_per_char = ms / static_cast<double>(chars);
  e.engine_ids = {title_engine->id, content_engine->id};
  spdlog::info("article id={} lang={} sentences={} chars={} ms={:.3f} ms_per_char={:.5f}", item.id,
               item.source_lang, sentences.size(), chars, ms, e.ms_per_char);
  item.enrichment = std::move(e);
  item.error.reset();
  return item;
}

}  // namespace onts::service

namespace onts::service {

std::vector<NewsItem> Pipeline::process_batch(std::vector<NewsItem> items, const PipelineToggles& toggles,
                                              std::size_t concurrency) const {
  auto one = [&](std::size_t i) {
    try {
      return process_item(items[i], toggles);
    } catch (const std::exception& e) {
      NewsItem failed = items[i];
      failed.enrichment.reset();
      failed.error = e.what();
      spdlog::warn("article id={} lang={} failed: {}", failed.id, failed.source_lang, e.what());
      return failed;
    }
  };
  if (concurrency <= 1) {
    std::vector<NewsItem> out;
    out.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) out.push_back(one(i));
    return out;
  }
  ThreadPool articles(std::min(concurrency, std::max<std::size_t>(items.size(), 1)));
  return articles.map(items.size(), one);
}

}  // namespace onts::service
