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

#include "onts/entities/recognizer.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "onts/common/error.hpp"
#include "onts/common/strings.hpp"
#include "onts/common/unicode.hpp"

namespace onts::entities {

namespace {

constexpr std::size_t kMaxNameTokens = 5;

bool shape_matches(std::string_view shape, std::string_view token) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < shape.size()) {
    if (shape[i] == '#') {
      const std::size_t start = j;
      while (j < token.size() && token[j] >= '0' && token[j] <= '9') ++j;
      if (j == start) return false;
      ++i;
      continue;
    }
    if (j >= token.size() || shape[i] != token[j]) return false;
    ++i;
    ++j;
  }
  return j == token.size();
}

bool is_particle(std::string_view tok) {
  return std::find(kNameParticles.begin(), kNameParticles.end(), tok) != kNameParticles.end();
}

std::size_t class_index(TriggerClass c) { return static_cast<std::size_t>(c); }

}  // namespace

std::string_view to_string(TriggerClass c) {
  switch (c) {
    case TriggerClass::kTitle: return "title";
    case TriggerClass::kProfession: return "profession";
    case TriggerClass::kGroup: return "group";
    case TriggerClass::kAge: return "age";
    case TriggerClass::kVerbal: return "verbal";
    case TriggerClass::kModifier: return "modifier";
  }
  return "";
}

TriggerLexicon TriggerLexicon::load(const std::string& dir, const std::string& lang) {
  TriggerLexicon lex(lang);
  for (TriggerClass c : kAllTriggerClasses) {
    const auto path = std::filesystem::path(dir) / lang / (std::string(to_string(c)) + ".txt");
    std::ifstream in(path);
    if (!in) continue;
    std::string line;
    while (std::getline(in, line)) {
      const auto t = trim(line);
      if (t.empty() || t.front() == '#') continue;
      lex.add(c, t);
    }
  }
  return lex;
}

void TriggerLexicon::add(TriggerClass c, std::string_view trigger) {
  auto tokens = split_whitespace(unicode::to_lower(trigger));
  if (tokens.empty()) return;
  auto& list = entries_[class_index(c)];
  if (std::find(list.begin(), list.end(), tokens) == list.end()) list.push_back(std::move(tokens));
}

std::size_t TriggerLexicon::match(TriggerClass c, std::span<const std::string> lowered,
                                  std::size_t pos) const {
  std::size_t best = 0;
  for (const auto& entry : entries_[class_index(c)]) {
    if (entry.size() <= best || pos + entry.size() > lowered.size()) continue;
    bool ok = true;
    for (std::size_t k = 0; k < entry.size() && ok; ++k) {
      ok = c == TriggerClass::kAge ? shape_matches(entry[k], lowered[pos + k])
                                   : entry[k] == lowered[pos + k];
    }
    if (ok) best = entry.size();
  }
  return best;
}

std::size_t TriggerLexicon::size() const {
  std::size_t n = 0;
  for (const auto& list : entries_) n += list.size();
  return n;
}

std::vector<EntityMention> recognize(const textprep::TokenizedSentence& ts,
                                     const TriggerLexicon& lexicon) {
  const auto& tokens = ts.tokens;
  std::vector<std::string> lowered;
  lowered.reserve(tokens.size());
  for (const auto& t : tokens) lowered.push_back(unicode::to_lower(t));

  auto trigger_at = [&](std::size_t pos, std::initializer_list<TriggerClass> classes) {
    std::size_t best = 0;
    for (TriggerClass c : classes) best = std::max(best, lexicon.match(c, lowered, pos));
    return best;
  };
  auto any_trigger_at = [&](std::size_t pos) {
    return trigger_at(pos, {TriggerClass::kTitle, TriggerClass::kProfession, TriggerClass::kGroup,
                            TriggerClass::kAge, TriggerClass::kVerbal, TriggerClass::kModifier});
  };
  auto name_at = [&](std::size_t pos) -> std::size_t {
    if (pos >= tokens.size() || !unicode::starts_upper(tokens[pos]) || any_trigger_at(pos) > 0)
      return 0;
    // A capitalized particle ("Le ministre ...") cannot start a name.
    if (is_particle(lowered[pos])) return 0;
    std::size_t len = 0;
    std::size_t last_upper = 0;
    while (pos + len < tokens.size() && len < kMaxNameTokens) {
      const auto& tok = tokens[pos + len];
      if (unicode::starts_upper(tok) && !is_particle(lowered[pos + len])) {
        last_upper = len + 1;
      } else if (!is_particle(lowered[pos + len])) {
        break;
      }
      ++len;
    }
    return last_upper;
  };
  auto skip_modifiers = [&](std::size_t pos) {
    while (std::size_t n = trigger_at(pos, {TriggerClass::kModifier})) pos += n;
    return pos;
  };

  std::vector<std::pair<std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    // [modifier]* [trigger]+ NAME
    std::size_t j = skip_modifiers(i);
    std::size_t triggers = 0;
    while (std::size_t n = trigger_at(j, {TriggerClass::kTitle, TriggerClass::kProfession,
                                          TriggerClass::kGroup, TriggerClass::kAge})) {
      j += n;
      ++triggers;
    }
    if (triggers > 0) {
      if (const std::size_t len = name_at(j)) candidates.emplace_back(j, j + len);
    }

    // NAME [,] [modifier]* trigger
    if (const std::size_t len = name_at(i)) {
      std::size_t k = i + len;
      if (k < tokens.size() && tokens[k] == ",") ++k;
      k = skip_modifiers(k);
      if (trigger_at(k, {TriggerClass::kTitle, TriggerClass::kProfession, TriggerClass::kGroup,
                         TriggerClass::kAge, TriggerClass::kVerbal}) > 0)
        candidates.emplace_back(i, i + len);
    }
  }

  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  });
  std::vector<EntityMention> mentions;
  std::size_t covered_until = 0;
  for (const auto& [start, end] : candidates) {
    if (start < covered_until) continue;
    EntityMention m;
    m.start = start;
    m.end = end;
    m.surface = join(std::span(tokens).subspan(start, end - start), " ");
    mentions.push_back(std::move(m));
    covered_until = end;
  }
  return mentions;
}

}  // namespace onts::entities
