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

#include <array>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "onts/decoder/phrase_table.hpp"
#include "onts/langmodel/model.hpp"

namespace onts {
struct NewsItem;
}

namespace onts::decoder {

enum class Style { kTitle, kContent };

std::string_view to_string(Style s);
// Throws onts::Error for anything but "title" / "content".
Style parse_style(std::string_view s);

// Feature order: log p(t|s), log p(s|t), LM log-prob, -target length,
// -distortion.
inline constexpr std::size_t kFeatureCount = 5;
using FeatureVector = std::array<double, kFeatureCount>;

struct DecoderConfig {
  FeatureVector weights = {1.0, 1.0, 1.0, 1.0, 0.5};
  std::size_t beam_width = 100;
  std::size_t distortion_limit = 6;
  double unknown_penalty = -10.0;

  // Throws onts::Error when B < 1, weights or penalty are not finite.
  void validate() const;
};

struct TranslationEngine {
  std::string id;
  std::string lang;
  Style style = Style::kContent;
  std::shared_ptr<const PhraseTable> table;
  std::shared_ptr<const langmodel::LanguageModel> lm;
  DecoderConfig config;
};

class EngineRegistry {
 public:
  // Replaces an existing engine for the same (lang, style).
  void add(std::shared_ptr<const TranslationEngine> engine);

  // Throws onts::Error naming the missing (lang, style) pair.
  const TranslationEngine& get(std::string_view lang, Style style) const;
  bool has(std::string_view lang, Style style) const;
  std::vector<std::string> languages() const;
  std::size_t size() const { return engines_.size(); }

  // Title text goes to the title engine, body sentences to the content
  // engine of the item's source language.
  std::pair<const TranslationEngine*, const TranslationEngine*> route(const NewsItem& item) const;

  // INI manifest with one section per engine, named "<lang>.<style>":
  //   phrase_table = path            (relative to the manifest)
  //   lm = path.arpa | lm_corpus = path [lm_order = 3]
  //   weights = 1 1 1 1 0.5, beam = 100, distortion = 6,
  //   max_options = 20, unknown_penalty = -10
  // Engines naming the same table or LM share one loaded instance.
  static EngineRegistry load_manifest(const std::string& path);

 private:
  std::map<std::pair<std::string, Style>, std::shared_ptr<const TranslationEngine>> engines_;
};

}  // namespace onts::decoder
