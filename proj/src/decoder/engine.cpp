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

#include "onts/decoder/engine.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cmath>
#include <filesystem>
#include <set>
#include <sstream>

#include "onts/common/error.hpp"
#include "onts/common/strings.hpp"
#include "onts/common/unicode.hpp"
#include "onts/feedio/news_item.hpp"

namespace onts::decoder {

namespace fs = std::filesystem;

std::string_view to_string(Style s) { return s == Style::kTitle ? "title" : "content"; }

Style parse_style(std::string_view s) {
  if (s == "title") return Style::kTitle;
  if (s == "content") return Style::kContent;
  throw Error("unknown engine style '" + std::string(s) + "' (expected title or content)");
}

void DecoderConfig::validate() const {
  if (beam_width < 1) throw Error("beam width must be at least 1");
  for (double w : weights)
    if (!std::isfinite(w)) throw Error("feature weights must be finite");
  if (!std::isfinite(unknown_penalty)) throw Error("unknown-word penalty must be finite");
}

void EngineRegistry::add(std::shared_ptr<const TranslationEngine> engine) {
  if (!engine->table || !engine->lm) throw Error("engine " + engine->id + " lacks a phrase table or LM");
  engine->config.validate();
  engines_[{engine->lang, engine->style}] = std::move(engine);
}

bool EngineRegistry::has(std::string_view lang, Style style) const {
  return engines_.count({std::string(lang), style}) > 0;
}

const TranslationEngine& EngineRegistry::get(std::string_view lang, Style style) const {
  const auto it = engines_.find({std::string(lang), style});
  if (it == engines_.end())
    throw Error("no translation engine for (" + std::string(lang) + "," + std::string(to_string(style)) + ")");
  return *it->second;
}

std::vector<std::string> EngineRegistry::languages() const {
  std::set<std::string> langs;
  for (const auto& [key, e] : engines_) langs.insert(key.first);
  return {langs.begin(), langs.end()};
}

std::pair<const TranslationEngine*, const TranslationEngine*> EngineRegistry::route(
    const NewsItem& item) const {
  return {&get(item.source_lang, Style::kTitle), &get(item.source_lang, Style::kContent)};
}

namespace {

FeatureVector parse_weights(const std::string& text, const std::string& section) {
  const auto parts = split_whitespace(text);
  if (parts.size() != kFeatureCount)
    throw Error("[" + section + "] weights needs " + std::to_string(kFeatureCount) + " values");
  FeatureVector w{};
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    try {
      std::size_t used = 0;
      w[i] = std::stod(parts[i], &used);
      if (used != parts[i].size()) throw std::invalid_argument(parts[i]);
    } catch (const std::exception&) {
      throw Error("[" + section + "] bad weight '" + parts[i] + "'");
    }
  }
  return w;
}

langmodel::Corpus lowercased(langmodel::Corpus corpus) {
  for (auto& s : corpus)
    for (auto& t : s) t = unicode::to_lower(t);
  return corpus;
}

}  // namespace

EngineRegistry EngineRegistry::load_manifest(const std::string& path) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(path, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ParseError(e.message(), e.line(), 1);
  }
  const fs::path base = fs::path(path).parent_path();
  auto resolve = [&](const std::string& p) { return (base / p).lexically_normal().string(); };

  std::map<std::pair<std::string, std::size_t>, std::shared_ptr<const PhraseTable>> tables;
  std::map<std::string, std::shared_ptr<const langmodel::LanguageModel>> lms;
  EngineRegistry registry;

  for (const auto& [section, body] : tree) {
    const auto dot = section.find('.');
    if (dot == std::string::npos) throw Error("manifest section [" + section + "] must be named <lang>.<style>");
    auto engine = std::make_shared<TranslationEngine>();
    engine->id = section;
    engine->lang = section.substr(0, dot);
    engine->style = parse_style(section.substr(dot + 1));

    std::size_t max_options = kDefaultMaxOptions;
    try {
      const auto k = body.get<long>("max_options", static_cast<long>(kDefaultMaxOptions));
      if (k < 1) throw Error("[" + section + "] max_options must be at least 1");
      max_options = static_cast<std::size_t>(k);
    } catch (const pt::ptree_error& e) {
      throw Error("[" + section + "] " + e.what());
    }
    const auto table_path = body.get_optional<std::string>("phrase_table");
    if (!table_path) throw Error("[" + section + "] missing phrase_table");
    auto& table = tables[{resolve(*table_path), max_options}];
    if (!table) table = std::make_shared<PhraseTable>(PhraseTable::load(resolve(*table_path), max_options));
    engine->table = table;

    if (const auto lm_path = body.get_optional<std::string>("lm")) {
      auto& lm = lms[resolve(*lm_path)];
      if (!lm) lm = std::make_shared<langmodel::LanguageModel>(langmodel::LanguageModel::load_arpa(resolve(*lm_path)));
      engine->lm = lm;
    } else if (const auto corpus = body.get_optional<std::string>("lm_corpus")) {
      const int order = body.get<int>("lm_order", 3);
      auto& lm = lms[resolve(*corpus) + "#" + std::to_string(order)];
      if (!lm)
        lm = std::make_shared<langmodel::LanguageModel>(
            langmodel::LanguageModel::train(lowercased(langmodel::load_corpus(resolve(*corpus))), order));
      engine->lm = lm;
    } else {
      throw Error("[" + section + "] needs lm or lm_corpus");
    }

    if (const auto w = body.get_optional<std::string>("weights")) engine->config.weights = parse_weights(*w, section);
    try {
      const auto beam = body.get<long>("beam", static_cast<long>(engine->config.beam_width));
      const auto distortion = body.get<long>("distortion", static_cast<long>(engine->config.distortion_limit));
      if (beam < 1) throw Error("[" + section + "] beam must be at least 1");
      if (distortion < 0) throw Error("[" + section + "] distortion must be non-negative");
      engine->config.beam_width = static_cast<std::size_t>(beam);
      engine->config.distortion_limit = static_cast<std::size_t>(distortion);
      engine->config.unknown_penalty = body.get<double>("unknown_penalty", engine->config.unknown_penalty);
    } catch (const pt::ptree_error& e) {
      throw Error("[" + section + "] " + e.what());
    }
    registry.add(std::move(engine));
  }
  return registry;
}

}  // namespace onts::decoder
