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
#include <random>
#include <sstream>

#include "onts/common/error.hpp"
#include "onts/langmodel/model.hpp"
#include "witten_bell_oracle.hpp"

using namespace onts::langmodel;
using onts::testing::WittenBellOracle;

namespace {

Corpus corpus(std::initializer_list<const char*> lines) {
  std::string text;
  for (const char* l : lines) (text += l) += '\n';
  std::istringstream in(text);
  return read_corpus(in);
}

Corpus random_corpus(std::mt19937& rng, std::size_t sentences, std::size_t vocab) {
  Corpus c;
  std::uniform_int_distribution<std::size_t> len(0, 8);
  std::uniform_int_distribution<std::size_t> word(0, vocab - 1);
  for (std::size_t i = 0; i < sentences; ++i) {
    Sentence s;
    for (std::size_t n = len(rng); n > 0; --n) s.push_back("w" + std::to_string(word(rng)));
    c.push_back(std::move(s));
  }
  return c;
}

double total_mass(const LanguageModel& lm, const std::vector<WordId>& context) {
  double sum = 0.0;
  for (WordId w : lm.predictable_words()) sum += std::pow(10.0, lm.log_prob(context, w));
  return sum;
}

}  // namespace

TEST(Train, UnigramHandFormula) {
  // Tokens a a b </s>: N = 4, T = 3, |V| = |{a, b, </s>, <unk>}| = 4.
  const auto lm = LanguageModel::train(corpus({"a a b"}), 1);
  EXPECT_NEAR(std::pow(10.0, lm.log_prob({}, lm.id("a"))), (2.0 + 3.0 / 4.0) / 7.0, 1e-12);
  EXPECT_NEAR(std::pow(10.0, lm.log_prob({}, lm.id("b"))), (1.0 + 3.0 / 4.0) / 7.0, 1e-12);
  EXPECT_NEAR(std::pow(10.0, lm.log_prob({}, kUnk)), (3.0 / 4.0) / 7.0, 1e-12);
  EXPECT_NEAR(total_mass(lm, {}), 1.0, 1e-12);
}

TEST(Train, BigramHandFormula) {
  // Bigrams: <s> x, x </s>. p(x|<s>) = (1 + 1 * p1(x)) / (1 + 1), with
  // p1(x) = (1 + 2/3) / (2 + 2) over V = {x, </s>, <unk>}.
  const auto lm = LanguageModel::train(corpus({"x"}), 2);
  const double p1x = (1.0 + 2.0 / 3.0) / 4.0;
  const std::vector<WordId> bos = {kBos};
  EXPECT_NEAR(std::pow(10.0, lm.log_prob(bos, lm.id("x"))), (1.0 + p1x) / 2.0, 1e-12);
  EXPECT_GT(lm.log_prob(bos, lm.id("x")), lm.log_prob(bos, kUnk));
  EXPECT_NEAR(total_mass(lm, bos), 1.0, 1e-12);
}

TEST(Train, Errors) {
  EXPECT_THROW(LanguageModel::train({}, 3), onts::Error);
  EXPECT_THROW(LanguageModel::train(corpus({"a"}), 0), onts::Error);
  EXPECT_THROW(LanguageModel::train(corpus({"a"}), 6), onts::Error);
  EXPECT_THROW(LanguageModel::train(corpus({"a </s> b"}), 2), onts::Error);
}

TEST(Query, AgreesWithOracle) {
  std::mt19937 rng(1);
  for (int order = 1; order <= 4; ++order) {
    const auto c = random_corpus(rng, 40, 12);
    const auto lm = LanguageModel::train(c, order);
    const WittenBellOracle oracle(c, order);
    std::uniform_int_distribution<std::size_t> word(0, 14);
    for (int q = 0; q < 300; ++q) {
      std::vector<std::string> ctx;
      const std::size_t len = rng() % static_cast<std::size_t>(order + 1);
      for (std::size_t i = 0; i < len; ++i) ctx.push_back(rng() % 5 == 0 ? "<s>" : "w" + std::to_string(word(rng)));
      const std::string w = rng() % 7 == 0 ? "</s>" : "w" + std::to_string(word(rng));
      ASSERT_NEAR(std::pow(10.0, lm.log_prob(ctx, w)), oracle.prob(ctx, w), 1e-12)
          << "order " << order << " word " << w;
    }
  }
}

TEST(Query, SeenBeatsUnseenAndDeterministic) {
  const auto lm = LanguageModel::train(corpus({"a a b"}), 3);
  const std::vector<std::string> none;
  EXPECT_GT(lm.log_prob(none, "a"), lm.log_prob(none, "zzz"));
  EXPECT_EQ(lm.log_prob(none, "zzz"), lm.log_prob(none, "<unk>"));
  EXPECT_EQ(lm.log_prob(none, "a"), lm.log_prob(none, "a"));
  for (const auto& w : {"a", "b", "zzz", "</s>"}) {
    const double lp = lm.log_prob(none, w);
    EXPECT_TRUE(std::isfinite(lp));
    EXPECT_LE(lp, 0.0);
  }
}

TEST(Query, NormalizedOverObservedContexts) {
  std::mt19937 rng(9);
  const auto c = random_corpus(rng, 60, 10);
  for (int order = 1; order <= 5; ++order) {
    const auto lm = LanguageModel::train(c, order);
    std::vector<WordId> ctx(static_cast<std::size_t>(order) - 1, kBos);
    for (const auto& s : c) {
      for (const auto& w : s) {
        ASSERT_NEAR(total_mass(lm, ctx), 1.0, 1e-9);
        ctx.push_back(lm.id(w));
        ctx.erase(ctx.begin());
      }
    }
  }
}

TEST(Score, SentenceAndPerplexity) {
  Corpus repeated(100, Sentence{"the", "minister", "visits", "paris"});
  const auto lm = LanguageModel::train(repeated, 3);
  EXPECT_LT(perplexity(lm, repeated), 1.5);

  const Sentence s = {"the", "minister"};
  Sentence extended = s;
  extended.push_back("volcano");
  EXPECT_LT(lm.score_sentence(extended), lm.score_sentence(s));

  const std::vector<WordId> bos = {kBos, kBos};
  EXPECT_DOUBLE_EQ(lm.score_sentence({}), lm.log_prob(bos, kEos));
}

TEST(Arpa, RoundTripPreservesProbabilities) {
  std::mt19937 rng(5);
  const auto c = random_corpus(rng, 30, 8);
  const auto lm = LanguageModel::train(c, 3);
  std::stringstream buf;
  lm.write_arpa(buf);
  const auto text = buf.str();
  EXPECT_NE(text.find("\\3-grams:"), std::string::npos);
  const auto copy = LanguageModel::read_arpa(buf);
  EXPECT_EQ(copy.order(), 3);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(copy.ngram_count(k), lm.ngram_count(k));
  for (const auto& s : c) EXPECT_EQ(copy.score_sentence(s), lm.score_sentence(s));
  std::stringstream again;
  copy.write_arpa(again);
  EXPECT_EQ(again.str(), text);
}

TEST(Arpa, Errors) {
  auto expect_line = [](const std::string& text, std::size_t line) {
    std::istringstream in(text);
    try {
      LanguageModel::read_arpa(in);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const onts::ParseError& e) {
      EXPECT_EQ(e.line(), line) << e.what();
    }
  };
  expect_line("ngram 1=1\n", 1);
  expect_line("\\data\\\nngram 1=1\n\n\\1-grams:\n-0.5\ta\tb\tc\n\\end\\\n", 5);
  expect_line("\\data\\\nngram 1=1\nngram 2=1\n\\1-grams:\n-0.5\ta\n\\2-grams:\n-0.1\ta q\n\\end\\\n", 7);
  expect_line("\\data\\\nngram 1=2\n\\1-grams:\n-0.5\ta\n\\end\\\n", 5);
  expect_line("\\data\\\nngram 1=1\n\\1-grams:\nx\ta\n\\end\\\n", 4);
}
