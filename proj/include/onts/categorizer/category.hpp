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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "onts/feedio/news_item.hpp"

namespace onts::textprep {
class Tokenizer;
}

namespace onts::categorizer {

// A single token or a quoted multi-token phrase. A trailing '*' on the last
// token matches any (possibly empty) suffix.
struct Pattern {
  std::vector<std::string> tokens;
  bool wildcard = false;

  std::string to_string() const;
  bool operator==(const Pattern&) const = default;
};

struct Expr {
  enum class Kind { kLeaf, kAnd, kOr, kNot, kNear };

  Kind kind = Kind::kLeaf;
  Pattern pattern;            // kLeaf
  int distance = 0;           // kNear, >= 1
  std::vector<Expr> children; // kAnd/kOr: >= 2, kNot: 1, kNear: 2 leaves

  static Expr leaf(Pattern p);
  static Expr near(Pattern left, Pattern right, int distance);
  static Expr negate(Expr e);
  static Expr all_of(std::vector<Expr> children);
  static Expr any_of(std::vector<Expr> children);

  // S-expression form, e.g. AND(NEAR/5(quake,damage),NOT(sport)).
  std::string to_string() const;
  bool operator==(const Expr&) const = default;
};

struct WeightedPattern {
  Pattern pattern;
  std::int64_t weight = 0;

  bool operator==(const WeightedPattern&) const = default;
};

struct CategoryDef {
  enum class Kind { kBoolean, kWeighted };

  std::string id;
  std::string lang = "*";
  Kind kind = Kind::kBoolean;
  std::optional<Expr> rule;              // kBoolean
  std::vector<WeightedPattern> patterns; // kWeighted
  std::int64_t threshold = 0;            // kWeighted
};

// Boolean grammar (keywords are uppercase):
//   expr   := term ("OR" term)*
//   term   := factor ("AND" factor)*
//   factor := "NOT" factor | "(" expr ")" | pattern ["NEAR/" n pattern]
// Weighted definitions use "pattern<TAB>weight" lines plus one
// "THRESHOLD<TAB>t" line. Lines starting with '#' are comments.
// Throws onts::ParseError with line/column on malformed input.
CategoryDef parse_definition(std::string_view source, std::string id = {}, std::string lang = "*");

// Cased article tokens with a lowercased shadow for case-insensitive matching.
class Document {
 public:
  explicit Document(std::vector<std::string> tokens);

  std::span<const std::string> tokens() const { return tokens_; }
  std::span<const std::string> lowered() const { return lowered_; }
  std::size_t size() const { return tokens_.size(); }

 private:
  std::vector<std::string> tokens_;
  std::vector<std::string> lowered_;
};

// Start positions of every match. A definition token with an uppercase letter
// matches only identically cased tokens; an all-lowercase one matches any case.
std::vector<std::size_t> match_pattern(const Pattern& p, const Document& doc);
std::vector<std::size_t> match_pattern(const Pattern& p, std::span<const std::string> tokens);

struct Evaluation {
  bool matched = false;
  std::optional<std::int64_t> score;  // weighted definitions only
};

Evaluation evaluate(const CategoryDef& def, const Document& doc);
Evaluation evaluate(const CategoryDef& def, std::span<const std::string> tokens);

// Ids of matching definitions whose lang is `lang` or "*", sorted.
std::vector<std::string> categorize(std::string_view lang, const Document& doc,
                                    std::span<const CategoryDef> defs);

// Tokenizes title then body, assigns item.categories and returns them.
std::vector<std::string> categorize(NewsItem& item, std::span<const CategoryDef> defs,
                                    const textprep::Tokenizer& tokenizer);

// Loads <root>/<lang>/<id>[.ext]; the shared directory is "*" or "_all".
std::vector<CategoryDef> load_definitions(const std::string& root);

}  // namespace onts::categorizer
