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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "onts/common/error.hpp"
#include "onts/common/strings.hpp"
#include "onts/decoder/engine.hpp"
#include "onts/decoder/phrase_table.hpp"
#include "onts/decoder/translate.hpp"
#include "onts/feedio/news_item.hpp"
#include "toy_decoder.hpp"

using namespace onts::decoder;
using onts::ConstrainedSpan;
using onts::langmodel::LanguageModel;

namespace {

std::vector<std::string> toks(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::shared_ptr<PhraseTable> table_from(const std::string& text) {
  std::istringstream in(text);
  return std::make_shared<PhraseTable>(PhraseTable::read(in));
}

std::shared_ptr<LanguageModel> lm_from(std::initializer_list<const char*> lines, int order = 2) {
  onts::langmodel::Corpus c;
  for (const char* l : lines) c.push_back(toks(l));
  return std::make_shared<LanguageModel>(LanguageModel::train(c, order));
}

TranslationEngine make_engine(std::shared_ptr<PhraseTable> table, std::shared_ptr<LanguageModel> lm) {
  TranslationEngine e;
  e.id = "test";
  e.lang = "de";
  e.table = std::move(table);
  e.lm = std::move(lm);
  return e;
}

void expect_partition(const TranslationResult& r, std::size_t n) {
  std::vector<int> covered(n, 0);
  for (const auto& step : r.derivation) {
    ASSERT_LT(step.start, step.end);
    ASSERT_LE(step.end, n);
    for (std::size_t i = step.start; i < step.end; ++i) ++covered[i];
  }
  for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(covered[i], 1) << "position " << i;
}

bool contains_contiguous(const std::vector<std::string>& hay, const std::vector<std::string>& needle) {
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

}  // namespace

TEST(PhraseTable, ReadsAndSorts) {
  const auto t = table_from(
      "der ||| the ||| 0.6 0.5\n"
      "der hund ||| the dog ||| 0.9 0.8\n"
      "der ||| of the ||| 0.3 0.2\n");
  EXPECT_EQ(t->size(), 2u);
  EXPECT_EQ(t->option_count(), 3u);
  const std::vector<std::string> der = {"der"};
  const auto* opts = t->find(der);
  ASSERT_NE(opts, nullptr);
  EXPECT_EQ((*opts)[0].target, toks("the"));
  EXPECT_EQ((*opts)[1].target, toks("of the"));
  EXPECT_EQ(t->find(toks("hund")), nullptr);
}

TEST(PhraseTable, PrunesToTopK) {
  std::string text;
  for (int i = 1; i <= 25; ++i) text += "a ||| t" + std::to_string(i) + " ||| " + std::to_string(i / 25.0) + " 0.5\n";
  const auto t = table_from(text);
  const auto* opts = t->find(toks("a"));
  ASSERT_EQ(opts->size(), 20u);
  EXPECT_EQ(opts->front().target, toks("t25"));
  EXPECT_EQ(opts->back().target, toks("t6"));
}

TEST(PhraseTable, Errors) {
  auto expect_line = [](const std::string& text, std::size_t line) {
    std::istringstream in(text);
    try {
      PhraseTable::read(in);
      ADD_FAILURE() << "accepted " << text;
    } catch (const onts::ParseError& e) {
      EXPECT_EQ(e.line(), line) << e.what();
    }
  };
  expect_line("a ||| b ||| 1.5 0.1\n", 1);
  expect_line("a ||| b ||| 0.5 0.5\na ||| b ||| 0 0.1\n", 2);
  expect_line("a ||| b ||| 0.5\n", 1);
  expect_line("a ||| b\n", 1);
  expect_line("x ||| y ||| 0.5 0.5\n\na b c d e f g h ||| b ||| 0.5 0.5\n", 3);
  expect_line("a |||  ||| 0.5 0.5\n", 1);
  expect_line("a ||| b ||| abc 0.5\n", 1);
}

TEST(PhraseTable, WriteReadRoundTrip) {
  const auto t = table_from("b ||| y ||| 0.25 0.125\na ||| x z ||| 0.1 1\n");
  std::stringstream out;
  t->write(out);
  EXPECT_EQ(out.str(), "a ||| x z ||| 0.1 1\nb ||| y ||| 0.25 0.125\n");
  const auto again = PhraseTable::read(out);
  EXPECT_EQ(*again.find(toks("a")), *t->find(toks("a")));
}

TEST(PhraseTable, CooccurrenceTrainer) {
  const std::vector<std::vector<std::string>> src = {toks("der hund"), toks("der mann")};
  const std::vector<std::vector<std::string>> tgt = {toks("the dog"), toks("the man")};
  const auto t = train_cooccurrence(src, tgt);
  const auto* der = t.find(toks("der"));
  ASSERT_NE(der, nullptr);
  // c(der,the) = 2, c(der) = 4, c(the) = 4.
  EXPECT_EQ(der->front().target, toks("the"));
  EXPECT_DOUBLE_EQ(der->front().p_target_given_source, 0.5);
  EXPECT_DOUBLE_EQ(der->front().p_source_given_target, 0.5);
  const auto* hund = t.find(toks("hund"));
  EXPECT_DOUBLE_EQ(hund->front().p_target_given_source, 0.5);
  EXPECT_DOUBLE_EQ(hund->front().p_source_given_target, 0.5);
  EXPECT_THROW(train_cooccurrence(src, {tgt[0]}), onts::Error);
}

TEST(Translate, PrefersWinningBigramPhrase) {
  auto engine = make_engine(table_from("der ||| the ||| 0.8 0.8\n"
                                       "hund ||| dog ||| 0.7 0.7\n"
                                       "der hund ||| the dog ||| 0.9 0.9\n"),
                            lm_from({"the dog", "the dog barks", "a dog"}));
  const auto r = translate(toks("der hund"), {}, engine);
  EXPECT_EQ(r.target, toks("the dog"));
  ASSERT_EQ(r.derivation.size(), 1u);
  EXPECT_EQ(r.derivation[0].start, 0u);
  EXPECT_EQ(r.derivation[0].end, 2u);
  const auto oracle = decode_exhaustive(toks("der hund"), {}, engine);
  EXPECT_EQ(oracle.score, r.score);
  EXPECT_EQ(oracle.target, r.target);
}

TEST(Translate, ForcedSpanBlocksWordTranslation) {
  auto engine = make_engine(table_from("le ||| the ||| 0.9 0.9\n"
                                       "maire ||| mayor ||| 0.9 0.9\n"
                                       "bruno ||| bruno ||| 0.9 0.9\n"
                                       "demissionne ||| resigns ||| 0.8 0.8\n"),
                            lm_from({"the mayor resigns", "bruno the mayor resigns"}));
  const auto tokens = toks("Bruno Le Maire demissionne");
  const ConstrainedSpan span{0, 3, toks("Bruno Le Maire")};
  const auto r = translate(tokens, std::span(&span, 1), engine);
  ASSERT_GE(r.target.size(), 3u);
  EXPECT_EQ(std::vector<std::string>(r.target.begin(), r.target.begin() + 3), toks("Bruno Le Maire"));
  EXPECT_FALSE(contains_contiguous(r.target, toks("the mayor")));
  EXPECT_EQ(r.derivation.front().origin, Origin::kForced);
  EXPECT_EQ(r.breakdown.features[0], 0.0 + std::log10(0.8));

  const auto lowered = toks("bruno le maire demissionne");
  const auto unprotected = translate(lowered, {}, engine);
  EXPECT_TRUE(contains_contiguous(unprotected.target, toks("the mayor")));
}

TEST(Translate, UnknownWordPassThrough) {
  auto engine = make_engine(table_from("der ||| the ||| 0.8 0.8\n"), lm_from({"the dog"}));
  const auto r = translate(toks("xylophon"), {}, engine);
  EXPECT_EQ(r.target, toks("xylophon"));
  EXPECT_EQ(r.unknown_words, toks("xylophon"));
  EXPECT_EQ(r.breakdown.unknown_penalty, -10.0);
  EXPECT_EQ(r.derivation[0].origin, Origin::kUnknown);
  // The penalty is charged once per unknown token, unweighted.
  const auto two = translate(toks("der xylophon"), {}, engine);
  EXPECT_EQ(two.unknown_words, toks("xylophon"));
  EXPECT_DOUBLE_EQ(two.breakdown.unknown_penalty, -10.0);
}

TEST(Translate, SingleTokenHandArithmetic) {
  auto lm = lm_from({"a", "b"});
  auto engine = make_engine(table_from("x ||| a ||| 0.5 0.5\nx ||| b ||| 0.2 0.9\n"), lm);
  const auto r = translate(toks("x"), {}, engine);
  auto score_of = [&](const std::string& w, double pts, double pst) {
    const std::vector<std::string> bos = {"<s>"};
    const std::vector<std::string> ctx = {w};
    const double lm_total = lm->log_prob(bos, w) + lm->log_prob(ctx, "</s>");
    return std::log10(pts) + std::log10(pst) + lm_total - 1.0;
  };
  const double a = score_of("a", 0.5, 0.5);
  const double b = score_of("b", 0.2, 0.9);
  ASSERT_GT(a, b);
  EXPECT_EQ(r.target, toks("a"));
  EXPECT_NEAR(r.score, a, 1e-12);
  EXPECT_NEAR(decode_exhaustive(toks("x"), {}, engine).score, a, 1e-12);
}

TEST(Translate, FullyForcedSentence) {
  auto engine = make_engine(table_from("a ||| b ||| 0.5 0.5\n"), lm_from({"b"}));
  const ConstrainedSpan span{0, 2, toks("Angela Merkel")};
  const auto r = translate(toks("Merkelová řekla"), std::span(&span, 1), engine);
  EXPECT_EQ(r.target, toks("Angela Merkel"));
  EXPECT_EQ(decode_exhaustive(toks("Merkelová řekla"), std::span(&span, 1), engine).target, r.target);
}

TEST(Translate, EmptyInputAndBadSpans) {
  auto engine = make_engine(table_from("a ||| b ||| 0.5 0.5\n"), lm_from({"b"}));
  const auto r = translate({}, {}, engine);
  EXPECT_TRUE(r.target.empty());
  EXPECT_TRUE(r.derivation.empty());
  const std::vector<ConstrainedSpan> overlapping = {{0, 2, toks("X")}, {1, 3, toks("Y")}};
  EXPECT_THROW(translate(toks("a a a"), overlapping, engine), onts::Error);
  const std::vector<ConstrainedSpan> outside = {{2, 5, toks("X")}};
  EXPECT_THROW(translate(toks("a a a"), outside, engine), onts::Error);
  const std::vector<ConstrainedSpan> empty_target = {{0, 1, {}}};
  EXPECT_THROW(translate(toks("a"), empty_target, engine), onts::Error);
  EXPECT_THROW(decode_exhaustive(toks("a a a a a a a a a"), {}, engine), onts::Error);
}

TEST(Translate, OracleEquivalenceWideBeam) {
  onts::testing::ToyDecoder toy(17);
  const auto engine = toy.engine(10000, 8);
  for (int i = 0; i < 25; ++i) {
    const auto s = toy.sentence(7);
    const auto beam = translate(s, {}, engine);
    const auto oracle = decode_exhaustive(s, {}, engine);
    ASSERT_EQ(beam.score, oracle.score) << onts::join(s, " ");
    ASSERT_EQ(beam.target, oracle.target);
  }
}

TEST(Translate, Invariants) {
  onts::testing::ToyDecoder toy(5);
  for (std::size_t d : {0u, 2u, 6u}) {
    const auto engine = toy.engine(50, d);
    for (int i = 0; i < 60; ++i) {
      const auto s = toy.sentence(12);
      std::vector<ConstrainedSpan> spans;
      if (s.size() >= 3 && i % 2 == 0) {
        const std::size_t start = toy.rng()() % (s.size() - 2);
        spans.push_back({start, start + 2, toks("Forced Name")});
      }
      const auto r = translate(s, spans, engine);
      expect_partition(r, s.size());
      EXPECT_NEAR(r.breakdown.dot(engine.config.weights), r.score, 1e-9);
      std::size_t length = 0;
      for (const auto& step : r.derivation) length += step.target.size();
      EXPECT_EQ(length, r.target.size());
      EXPECT_EQ(-r.breakdown.features[3], static_cast<double>(r.target.size()));
      for (const auto& span : spans) {
        EXPECT_TRUE(contains_contiguous(r.target, span.forced_target));
        const auto forced = std::count_if(r.derivation.begin(), r.derivation.end(), [&](const DerivationStep& st) {
          return st.origin == Origin::kForced && st.start == span.start && st.end == span.end;
        });
        EXPECT_EQ(forced, 1);
      }
      if (d == 0) {
        for (std::size_t k = 1; k < r.derivation.size(); ++k)
          EXPECT_EQ(r.derivation[k].start, r.derivation[k - 1].end);
      }
      const auto again = translate(s, spans, engine);
      EXPECT_EQ(again.target, r.target);
      EXPECT_EQ(again.score, r.score);
    }
  }
}

TEST(Registry, RoutesByLanguageAndStyle) {
  auto table = table_from("a ||| b ||| 0.5 0.5\n");
  auto lm = lm_from({"b"});
  EngineRegistry reg;
  for (auto style : {Style::kTitle, Style::kContent}) {
    auto e = std::make_shared<TranslationEngine>(make_engine(table, lm));
    e->style = style;
    e->id = "de." + std::string(to_string(style));
    reg.add(e);
  }
  onts::NewsItem item;
  item.source_lang = "de";
  const auto [title, content] = reg.route(item);
  EXPECT_EQ(title->id, "de.title");
  EXPECT_EQ(content->id, "de.content");
  EXPECT_EQ(reg.route(item), reg.route(item));

  item.source_lang = "fr";
  try {
    reg.route(item);
    FAIL();
  } catch (const onts::Error& e) {
    EXPECT_NE(std::string(e.what()).find("(fr,title)"), std::string::npos);
  }
  EngineRegistry content_only;
  auto e = std::make_shared<TranslationEngine>(make_engine(table, lm));
  content_only.add(e);
  item.source_lang = "de";
  try {
    content_only.route(item);
    FAIL();
  } catch (const onts::Error& err) {
    EXPECT_NE(std::string(err.what()).find("(de,title)"), std::string::npos);
  }
}

TEST(Registry, LoadsManifest) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "onts_manifest_test";
  fs::create_directories(dir);
  std::ofstream(dir / "table.txt") << "haus ||| house ||| 0.9 0.9\n";
  std::ofstream(dir / "title.txt") << "house prices rise\nnew house\n";
  std::ofstream(dir / "content.txt") << "the house is new\n";
  std::ofstream(dir / "engines.ini") << "[de.title]\nphrase_table = table.txt\nlm_corpus = title.txt\nlm_order = 2\n"
                                        "beam = 7\ndistortion = 0\nweights = 1 1 2 1 0.5\n\n"
                                        "[de.content]\nphrase_table = table.txt\nlm_corpus = content.txt\n";
  const auto reg = EngineRegistry::load_manifest((dir / "engines.ini").string());
  EXPECT_EQ(reg.size(), 2u);
  const auto& title = reg.get("de", Style::kTitle);
  const auto& content = reg.get("de", Style::kContent);
  EXPECT_EQ(title.config.beam_width, 7u);
  EXPECT_EQ(title.config.distortion_limit, 0u);
  EXPECT_EQ(title.config.weights[2], 2.0);
  EXPECT_EQ(content.config.beam_width, 100u);
  EXPECT_EQ(title.table, content.table);
  EXPECT_EQ(title.lm->order(), 2);
  EXPECT_EQ(content.lm->order(), 3);
  EXPECT_EQ(translate(toks("haus"), {}, title).target, toks("house"));

  std::ofstream(dir / "bad.ini") << "[de.title]\nphrase_table = table.txt\nlm_corpus = title.txt\nbeam = 0\n";
  EXPECT_THROW(EngineRegistry::load_manifest((dir / "bad.ini").string()), onts::Error);
  std::ofstream(dir / "bad2.ini") << "[de.headline]\nphrase_table = table.txt\nlm_corpus = title.txt\n";
  EXPECT_THROW(EngineRegistry::load_manifest((dir / "bad2.ini").string()), onts::Error);
  fs::remove_all(dir);
}
