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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "category_cases.hpp"
#include "category_oracle.hpp"
#include "onts/categorizer/category.hpp"
#include "onts/common/error.hpp"
#include "onts/common/strings.hpp"
#include "onts/textprep/tokenizer.hpp"

using namespace onts::categorizer;

namespace {

std::vector<std::string> words(std::initializer_list<const char*> list) {
  return {list.begin(), list.end()};
}

bool matches(const std::string& def, const std::vector<std::string>& doc) {
  return evaluate(parse_definition(def), doc).matched;
}

}  // namespace

TEST(Parse, OrWithPhrase) {
  const auto def = parse_definition(R"(earthquake OR "Richter scale")");
  ASSERT_EQ(def.kind, CategoryDef::Kind::kBoolean);
  EXPECT_EQ(def.rule->to_string(), R"(OR(earthquake,"Richter scale"))");
  EXPECT_EQ(def.rule->children[1].pattern.tokens, words({"Richter", "scale"}));
}

TEST(Parse, Precedence) {
  const auto def = parse_definition("quake NEAR/5 damage AND NOT sport");
  EXPECT_EQ(def.rule->to_string(), "AND(NEAR/5(quake,damage),NOT(sport))");
  EXPECT_EQ(parse_definition("a OR b AND c").rule->to_string(), "OR(a,AND(b,c))");
  EXPECT_EQ(parse_definition("(a OR b) AND c").rule->to_string(), "AND(OR(a,b),c)");
  EXPECT_EQ(parse_definition("NOT a NEAR/2 b").rule->to_string(), "NOT(NEAR/2(a,b))");
}

TEST(Parse, Weighted) {
  const auto def = parse_definition("quake\t+2\ntremor\t+1\nsport\t-3\nTHRESHOLD\t2\n", "quakes", "en");
  ASSERT_EQ(def.kind, CategoryDef::Kind::kWeighted);
  EXPECT_FALSE(def.rule.has_value());
  ASSERT_EQ(def.patterns.size(), 3u);
  EXPECT_EQ(def.patterns[0].weight, 2);
  EXPECT_EQ(def.patterns[2].weight, -3);
  EXPECT_EQ(def.threshold, 2);
  EXPECT_EQ(def.id, "quakes");
  EXPECT_EQ(def.lang, "en");
}

TEST(Parse, Errors) {
  auto expect_error = [](const std::string& src, std::size_t line, std::size_t column) {
    try {
      parse_definition(src);
      ADD_FAILURE() << "no error for " << src;
    } catch (const onts::ParseError& e) {
      EXPECT_EQ(e.line(), line) << src << ": " << e.what();
      EXPECT_EQ(e.column(), column) << src << ": " << e.what();
    }
  };
  expect_error("quake NEAR/0 damage", 1, 7);
  expect_error("quake AND\n  te*ror", 2, 3);
  expect_error("(quake OR war", 1, 14);
  expect_error("quake AND", 1, 10);
  expect_error("quake war", 1, 7);
  expect_error("quake NEAR/x war", 1, 7);
  expect_error("\"unterminated", 1, 1);
  expect_error("quake\t2\n", 2, 1);  // missing THRESHOLD: reported at end of input
  EXPECT_THROW(parse_definition("quake\tabc\nTHRESHOLD\t1"), onts::ParseError);
}

TEST(Match, CaseRules) {
  EXPECT_EQ(match_pattern(Pattern{{"apple"}, false}, words({"Apple", "pie"})), std::vector<std::size_t>{0});
  EXPECT_TRUE(match_pattern(Pattern{{"Apple"}, false}, words({"apple", "pie"})).empty());
  EXPECT_EQ(match_pattern(Pattern{{"terror"}, true}, words({"terrorism"})), std::vector<std::size_t>{0});
  EXPECT_EQ(match_pattern(Pattern{{"terror"}, true}, words({"terror"})), std::vector<std::size_t>{0});
  EXPECT_TRUE(match_pattern(Pattern{{"EU"}, false}, words({"Eu", "eu"})).empty());
  EXPECT_EQ(match_pattern(Pattern{{"eu"}, false}, words({"EU", "x", "eu"})), (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(match_pattern(Pattern{{"über"}, false}, words({"ÜBER"})), std::vector<std::size_t>{0});
}

TEST(Match, Phrases) {
  const Pattern p{{"richter", "scale"}, false};
  EXPECT_EQ(match_pattern(p, words({"the", "Richter", "Scale", "richter", "scale"})),
            (std::vector<std::size_t>{1, 3}));
  EXPECT_TRUE(match_pattern(p, words({"Richter", "x", "scale"})).empty());
  EXPECT_TRUE(match_pattern(p, words({"Richter"})).empty());
}

TEST(Evaluate, Examples) {
  const auto doc = words({"a", "b", "c", "quake", "x", "y", "z", "damage"});
  EXPECT_TRUE(matches("quake NEAR/5 damage", doc));  // distance 4
  EXPECT_TRUE(matches("quake NEAR/4 damage", doc));
  EXPECT_FALSE(matches("quake NEAR/3 damage", doc));
  EXPECT_TRUE(matches("damage NEAR/4 quake", doc));
  EXPECT_TRUE(matches("NOT war", doc));
  EXPECT_FALSE(matches("NOT quake", doc));
  const auto weighted = parse_definition("quake\t+2\nsport\t-3\nTHRESHOLD\t2");
  const auto r = evaluate(weighted, words({"quake", "and", "sport"}));
  EXPECT_FALSE(r.matched);
  EXPECT_EQ(r.score, -1);
  EXPECT_FALSE(evaluate(parse_definition("quake"), doc).score.has_value());
}

TEST(Evaluate, WeightedCountsEveryOccurrence) {
  const auto def = parse_definition("quake\t+2\ntremor\t+1\nTHRESHOLD\t5");
  EXPECT_EQ(evaluate(def, words({"quake", "Quake", "tremor"})).score, 5);
  EXPECT_TRUE(evaluate(def, words({"quake", "Quake", "tremor"})).matched);
  EXPECT_FALSE(evaluate(def, words({"quake", "tremor"})).matched);
}

TEST(Evaluate, NearUsesPhraseStart) {
  const auto doc = words({"Richter", "scale", "x", "x", "damage"});
  EXPECT_TRUE(matches("\"richter scale\" NEAR/4 damage", doc));
  EXPECT_FALSE(matches("\"richter scale\" NEAR/3 damage", doc));
}

TEST(Properties, OrMonotoneNearMonotoneWeightedLinear) {
  onts::testing::CategoryFuzzer fuzz(11);
  for (int i = 0; i < 300; ++i) {
    const auto doc = fuzz.document(30);
    const std::string a = fuzz.definition(2);
    const std::string b = fuzz.definition(2);
    if (matches(a, doc)) EXPECT_TRUE(matches("(" + a + ") OR (" + b + ")", doc));
  }
  const auto doc = words({"quake", "a", "b", "c", "damage"});
  bool prev = false;
  for (int n = 1; n < 8; ++n) {
    const bool now = matches("quake NEAR/" + std::to_string(n) + " damage", doc);
    if (prev) EXPECT_TRUE(now);
    prev = now;
  }
  EXPECT_TRUE(prev);

  const auto def = parse_definition("quake\t+2\nsport\t-3\n\"red cross\"\t4\nTHRESHOLD\t0");
  for (int i = 0; i < 50; ++i) {
    auto d = fuzz.document(20);
    d.push_back("quake");
    d.push_back("red");
    d.push_back("Cross");
    auto doubled = d;
    doubled.insert(doubled.end(), d.begin(), d.end());
    EXPECT_EQ(*evaluate(def, doubled).score, 2 * *evaluate(def, d).score);
  }
}

TEST(Properties, AgreesWithBruteForce) {
  onts::testing::CategoryFuzzer fuzz(3);
  for (int i = 0; i < 500; ++i) {
    const auto src = fuzz.definition();
    const auto doc = fuzz.document();
    const auto def = parse_definition(src);
    EXPECT_EQ(evaluate(def, doc).matched, onts::testing::oracle_eval(*def.rule, doc)) << src;
  }
}

TEST(Categorize, LangGateAndSorting) {
  std::vector<CategoryDef> defs = {
      parse_definition("Erdbeben", "quake", "de"),
      parse_definition("Berlin", "germany", "*"),
      parse_definition("krieg", "conflict", "de"),
      parse_definition("Paris", "france", "fr"),
      parse_definition("NOT Berlin", "not_berlin", "*"),
  };
  onts::textprep::Tokenizer tok;
  onts::NewsItem item{.id = "1", .source_lang = "de", .title = "Erdbeben in Berlin",
                      .body = "Paris meldet Schäden."};
  EXPECT_EQ(categorize(item, defs, tok), words({"germany", "quake"}));
  EXPECT_EQ(item.categories, words({"germany", "quake"}));

  item.source_lang = "fr";
  EXPECT_EQ(categorize(item, defs, tok), words({"france", "germany"}));
  EXPECT_TRUE(categorize(item, std::vector<CategoryDef>{}, tok).empty());
}

TEST(Categorize, LoadsDirectoryTree) {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "onts_categories_test";
  fs::remove_all(root);
  fs::create_directories(root / "de");
  fs::create_directories(root / "_all");
  std::ofstream(root / "de" / "quake.cat") << "erdbeben* OR beben\n";
  std::ofstream(root / "_all" / "eu.cat") << "# shared\nEU\n";
  const auto defs = load_definitions(root.string());
  ASSERT_EQ(defs.size(), 2u);
  EXPECT_EQ(defs[0].id, "eu");
  EXPECT_EQ(defs[0].lang, "*");
  EXPECT_EQ(defs[1].id, "quake");
  EXPECT_EQ(defs[1].lang, "de");
  std::ofstream(root / "de" / "broken.cat") << "a AND\n";
  EXPECT_THROW(load_definitions(root.string()), onts::ParseError);
  fs::remove_all(root);
}

TEST(Evaluate, WorkedCaseTable) {
  for (const auto& c : onts::testing::kCategoryCases) {
    const auto doc = onts::split_whitespace(c.document);
    EXPECT_EQ(evaluate(parse_definition(c.definition), doc).matched, c.expected) << c.definition << " | " << c.document;
  }
}
