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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "onts/textprep/tokenizer.hpp"

namespace onts::entities {

enum class TriggerClass { kTitle, kProfession, kGroup, kAge, kVerbal, kModifier };

inline constexpr std::array<TriggerClass, 6> kAllTriggerClasses = {
    TriggerClass::kTitle, TriggerClass::kProfession, TriggerClass::kGroup,
    TriggerClass::kAge,   TriggerClass::kVerbal,     TriggerClass::kModifier};

std::string_view to_string(TriggerClass c);

// Language-specific trigger words. Entries may span several tokens
// ("tennis player"); matching is case-insensitive. Age entries are shapes in
// which '#' stands for a run of digits ("#-year-old").
class TriggerLexicon {
 public:
  TriggerLexicon() = default;
  explicit TriggerLexicon(std::string lang) : lang_(std::move(lang)) {}

  // Reads <dir>/<lang>/<class>.txt (title.txt, profession.txt, ...); missing
  // class files are treated as empty.
  static TriggerLexicon load(const std::string& dir, const std::string& lang);

  void add(TriggerClass c, std::string_view trigger);

  // Length in tokens of the longest trigger of class `c` starting at `pos`,
  // 0 when none. `lowered` are the lowercased sentence tokens.
  std::size_t match(TriggerClass c, std::span<const std::string> lowered, std::size_t pos) const;

  const std::string& lang() const { return lang_; }
  std::size_t size() const;

 private:
  std::string lang_;
  std::array<std::vector<std::vector<std::string>>, 6> entries_;
};

struct EntityMention {
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive
  std::string surface;
  std::optional<std::uint64_t> matched_id;

  bool operator==(const EntityMention&) const = default;
};

// Lowercase tokens allowed inside a name ("Ludwig van Beethoven").
inline constexpr std::array<std::string_view, 9> kNameParticles = {
    "de", "da", "le", "la", "van", "von", "bin", "al", "el"};

// Rule-based name finder over cased tokens. Two pattern families:
//   [modifier]* [title|profession|group|age]+ NAME
//   NAME [","] [modifier]* trigger
// NAME is 1..5 tokens, uppercase-initial or name particles (any case),
// starting and ending with an uppercase-initial non-particle token, and not
// starting with a trigger.
// Overlapping candidates are resolved leftmost-longest.
std::vector<EntityMention> recognize(const textprep::TokenizedSentence& ts,
                                     const TriggerLexicon& lexicon);

}  // namespace onts::entities
