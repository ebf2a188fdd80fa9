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

#include "onts/textprep/tokenizer.hpp"

#include <fstream>

#include "onts/common/error.hpp"
#include "onts/common/strings.hpp"
#include "onts/common/unicode.hpp"

namespace onts::textprep {

namespace {

// Punctuation split off the front of a chunk.
bool is_opening(char32_t c) {
  switch (c) {
    case U'(': case U'[': case U'{': case U'"': case U'\'':
    case U'„': case U'«': case U'‚': case U'¿': case U'¡':
      return true;
    default:
      return false;
  }
}

// Punctuation split off the back of a chunk.
bool is_trailing(char32_t c) {
  switch (c) {
    case U',': case U'.': case U';': case U':': case U'?': case U'!':
    case U')': case U']': case U'}': case U'"': case U'\'': case U'%':
    case U'»': case U'“': case U'”': case U'’': case U'…':
      return true;
    default:
      return false;
  }
}

// Closing characters that may sit between a sentence-final mark and the gap.
bool is_closer(char32_t c) {
  switch (c) {
    case U')': case U']': case U'}': case U'"': case U'\'':
    case U'»': case U'“': case U'”': case U'’':
      return true;
    default:
      return false;
  }
}

bool attaches_left(std::string_view tok) {
  static const std::unordered_set<std::string_view> kLeft = {
      ",", ".", ";", ":", "?", "!", ")", "]", "}", "%",
      "»", "“", "”", "’", "…"};
  return kLeft.count(tok) > 0;
}

bool attaches_right(std::string_view tok) {
  static const std::unordered_set<std::string_view> kRight = {
      "(", "[", "{", "„", "«", "‚", "¿", "¡"};
  return kRight.count(tok) > 0;
}

std::string_view last_cp(std::string_view s) {
  if (s.empty()) return s;
  std::size_t i = s.size() - 1;
  while (i > 0 && (static_cast<unsigned char>(s[i]) & 0xC0) == 0x80) --i;
  return s.substr(i);
}

std::string_view first_cp(std::string_view s) {
  if (s.empty()) return s;
  std::size_t n = 1;
  while (n < s.size() && (static_cast<unsigned char>(s[n]) & 0xC0) == 0x80) ++n;
  return s.substr(0, n);
}

}  // namespace

AbbreviationList::AbbreviationList(std::vector<std::string> entries) {
  for (auto& e : entries) {
    folded_.insert(unicode::to_lower(e));
    entries_.insert(std::move(e));
  }
}

AbbreviationList AbbreviationList::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open abbreviation list " + path);
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    entries.emplace_back(t);
  }
  return AbbreviationList(std::move(entries));
}

bool AbbreviationList::contains(std::string_view token) const {
  if (entries_.count(std::string(token))) return true;
  return folded_.count(unicode::to_lower(token)) > 0;
}

bool TokenizedSentence::is_protected(std::size_t index) const {
  for (const auto& span : protected_spans) {
    if (index >= span.start && index < span.end) return true;
    if (span.start > index) break;
  }
  return false;
}

void TokenizedSentence::validate() const {
  std::size_t prev_end = 0;
  for (const auto& span : protected_spans) {
    if (span.start >= span.end || span.end > tokens.size())
      throw Error("protected span out of bounds");
    if (span.start < prev_end) throw Error("protected spans overlap or are unsorted");
    prev_end = span.end;
  }
}

Tokenizer::Tokenizer(AbbreviationList abbreviations)
    : abbreviations_(std::move(abbreviations)) {}

std::vector<std::string> Tokenizer::split_sentences(std::string_view text) const {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  std::size_t i = 0;
  auto flush = [&](std::size_t end) {
    const auto s = trim(text.substr(start, end - start));
    if (!s.empty()) sentences.emplace_back(s);
    start = end;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c != '.' && c != '?' && c != '!') {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < text.size()) {
      const auto cp = first_cp(text.substr(j));
      if (!is_closer(unicode::first_char(cp))) break;
      j += cp.size();
    }
    if (j >= text.size() || !is_space(text[j])) {
      i = j > i + 1 ? j : i + 1;
      continue;
    }
    std::size_t k = j;
    while (k < text.size() && is_space(text[k])) ++k;
    if (k >= text.size()) break;
    const char32_t next = unicode::first_char(text.substr(k));
    const bool starts_sentence =
        unicode::starts_upper(text.substr(k)) || (next >= U'0' && next <= U'9');
    bool abbreviation = false;
    if (c == '.' && j == i + 1) {
      std::size_t w = i;
      while (w > start && !is_space(text[w - 1])) --w;
      std::string_view word = text.substr(w, i + 1 - w);
      while (!word.empty() && is_opening(unicode::first_char(word)))
        word.remove_prefix(first_cp(word).size());
      abbreviation = abbreviations_.contains(word);
    }
    if (starts_sentence && !abbreviation) flush(j);
    i = k;
  }
  flush(text.size());
  return sentences;
}

void Tokenizer::tokenize_chunk(std::string_view chunk, std::vector<std::string>& out) const {
  std::vector<std::string> trailing;
  while (!chunk.empty()) {
    if (abbreviations_.contains(chunk)) break;
    const auto head = first_cp(chunk);
    if (chunk.size() > head.size() && is_opening(unicode::first_char(head))) {
      out.emplace_back(head);
      chunk.remove_prefix(head.size());
      continue;
    }
    break;
  }
  while (!chunk.empty()) {
    if (abbreviations_.contains(chunk)) break;
    const auto tail = last_cp(chunk);
    if (chunk.size() > tail.size() && is_trailing(unicode::first_char(tail))) {
      trailing.emplace_back(tail);
      chunk.remove_suffix(tail.size());
      continue;
    }
    break;
  }
  if (!chunk.empty()) out.emplace_back(chunk);
  out.insert(out.end(), trailing.rbegin(), trailing.rend());
}

TokenizedSentence Tokenizer::tokenize(std::string_view sentence) const {
  TokenizedSentence ts;
  for (const auto& chunk : split_whitespace(sentence)) tokenize_chunk(chunk, ts.tokens);
  return ts;
}

std::string detokenize(std::span<const std::string> tokens) {
  std::string out;
  bool glue_next = false;
  bool double_open = false;
  bool single_open = false;
  for (const auto& tok : tokens) {
    bool glue_prev = attaches_left(tok);
    bool opens = attaches_right(tok);
    if (tok == "\"" || tok == "'") {
      bool& open = tok == "\"" ? double_open : single_open;
      if (open) {
        glue_prev = true;
      } else {
        opens = true;
      }
      open = !open;
    }
    if (!out.empty() && !glue_prev && !glue_next) out += ' ';
    out += tok;
    glue_next = opens;
  }
  return out;
}

TokenizedSentence lowercase_outside_spans(const TokenizedSentence& ts) {
  TokenizedSentence out = ts;
  for (std::size_t i = 0; i < out.tokens.size(); ++i) {
    if (!ts.is_protected(i)) out.tokens[i] = unicode::to_lower(out.tokens[i]);
  }
  return out;
}

}  // namespace onts::textprep
