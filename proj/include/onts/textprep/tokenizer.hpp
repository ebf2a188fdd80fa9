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
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace onts::textprep {

// Tokens that keep their trailing period ("Dr.", "S.", "z.B.").
// Loaded from a per-language file, one entry per line; '#' starts a comment.
class AbbreviationList {
 public:
  AbbreviationList() = default;
  explicit AbbreviationList(std::vector<std::string> entries);

  static AbbreviationList load(const std::string& path);

  // Case-sensitive lookup first, then case-insensitive.
  bool contains(std::string_view token) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_set<std::string> entries_;
  std::unordered_set<std::string> folded_;
};

struct ProtectedSpan {
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive
  std::string reason;

  bool operator==(const ProtectedSpan&) const = default;
};

struct TokenizedSentence {
  std::vector<std::string> tokens;
  // Sorted, non-overlapping, within bounds.
  std::vector<ProtectedSpan> protected_spans;

  bool is_protected(std::size_t index) const;
  // Throws onts::Error when the span invariants are violated.
  void validate() const;
};

class Tokenizer {
 public:
  Tokenizer() = default;
  explicit Tokenizer(AbbreviationList abbreviations);

  // Boundaries fall after '.', '?' or '!' (plus any closing quotes/brackets)
  // when followed by whitespace and an uppercase letter or digit. A period
  // ending a listed abbreviation never closes a sentence.
  std::vector<std::string> split_sentences(std::string_view text) const;

  TokenizedSentence tokenize(std::string_view sentence) const;

  const AbbreviationList& abbreviations() const { return abbreviations_; }

 private:
  void tokenize_chunk(std::string_view chunk, std::vector<std::string>& out) const;

  AbbreviationList abbreviations_;
};

std::string detokenize(std::span<const std::string> tokens);

// Lowercases every token outside the protected spans.
TokenizedSentence lowercase_outside_spans(const TokenizedSentence& ts);

}  // namespace onts::textprep
