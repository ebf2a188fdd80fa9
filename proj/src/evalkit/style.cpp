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

#include "onts/evalkit/style.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <span>

#include "onts/common/error.hpp"
#include "onts/common/strings.hpp"
#include "onts/common/unicode.hpp"
#include "onts/decoder/translate.hpp"
#include "onts/langmodel/model.hpp"

namespace onts::evalkit {

bool StyleMatrix::diagonal_dominant(double margin) const {
  return title_on_title() - content_on_title() > margin && content_on_content() - title_on_content() > margin;
}

namespace {

TokenizedCorpus translate_all(const decoder::TranslationEngine& engine, const TokenizedCorpus& sources) {
  TokenizedCorpus out;
  out.reserve(sources.size());
  for (const auto& s : sources) {
    auto target = decoder::translate(s, {}, engine).target;
    for (auto& t : target) t = unicode::to_lower(t);
    out.push_back(std::move(target));
  }
  return out;
}

void check_set(const TestSet& set, const char* name) {
  if (set.sources.empty()) throw Error(std::string(name) + " test set is empty");
  if (set.sources.size() != set.references.size())
    throw Error(std::string(name) + " test set has " + std::to_string(set.sources.size()) + " sources but " +
                std::to_string(set.references.size()) + " references");
}

}  // namespace

StyleMatrix style_experiment(const decoder::TranslationEngine& title_engine,
                             const decoder::TranslationEngine& content_engine, const TestSet& title_set,
                             const TestSet& content_set) {
  check_set(title_set, "title");
  check_set(content_set, "content");
  StyleMatrix m;
  const decoder::TranslationEngine* engines[] = {&title_engine, &content_engine};
  const TestSet* sets[] = {&title_set, &content_set};
  for (std::size_t e = 0; e < 2; ++e)
    for (std::size_t s = 0; s < 2; ++s)
      m.bleu[e][s] = bleu(translate_all(*engines[e], sets[s]->sources), sets[s]->references).bleu;
  return m;
}

namespace {

struct Noun {
  const char* source;
  const char* article;  // source-side article in full sentences
  const char* english;
};

struct Verb {
  const char* source;
  const char* gerund;
  const char* third_person;
};

const Noun kSubjects[] = {
    {"minister", "der", "minister"}, {"präsident", "der", "president"}, {"kanzlerin", "die", "chancellor"},
    {"polizei", "die", "police"},    {"firma", "die", "company"},       {"regierung", "die", "government"},
    {"trainer", "der", "coach"},     {"bürgermeister", "der", "mayor"},
};

const Noun kObjects[] = {
    {"fabrik", "die", "factory"}, {"schule", "die", "school"}, {"gipfel", "den", "summit"},
    {"hafen", "den", "port"},     {"klinik", "die", "clinic"}, {"plan", "den", "plan"},
};

const char* const kPlaces[][2] = {{"paris", "paris"}, {"berlin", "berlin"}, {"brüssel", "brussels"}, {"rom", "rome"}};

const Verb kVerbs[] = {
    {"besucht", "visiting", "visits"},        {"trifft", "meeting", "meets"},
    {"kritisiert", "criticising", "criticises"}, {"eröffnet", "opening", "opens"},
    {"unterstützt", "backing", "backs"},      {"verlässt", "leaving", "leaves"},
};

const char* const kAdverbs[][2] = {{"heute", "today"}, {"gestern", "yesterday"}, {"erneut", "again"}};

struct Example {
  std::vector<std::string> title_source, title_reference;
  std::vector<std::string> content_source, content_reference;
};

class Grammar {
 public:
  explicit Grammar(unsigned seed) : rng_(seed) {}

  Example next() {
    const Noun& subj = pick(kSubjects);
    const Verb& verb = pick(kVerbs);
    Example ex;
    ex.title_source = {subj.source, verb.source};
    ex.title_reference = {subj.english, verb.gerund};
    ex.content_source = {subj.article, subj.source, verb.source};
    ex.content_reference = {"the", subj.english, "is", verb.gerund};
    if (rng_() % 3 == 0) {
      const auto& place = pick(kPlaces);
      for (auto* v : {&ex.title_source, &ex.content_source}) v->push_back(place[0]);
      for (auto* v : {&ex.title_reference, &ex.content_reference}) v->push_back(place[1]);
    } else {
      const Noun& obj = pick(kObjects);
      ex.title_source.push_back(obj.source);
      ex.title_reference.push_back(obj.english);
      ex.content_source.insert(ex.content_source.end(), {obj.article, obj.source});
      ex.content_reference.insert(ex.content_reference.end(), {"the", obj.english});
    }
    // Every example ends in an adverb so headlines reach four tokens.
    const auto& adv = pick(kAdverbs);
    for (auto* v : {&ex.title_source, &ex.content_source}) v->push_back(adv[0]);
    for (auto* v : {&ex.title_reference, &ex.content_reference}) v->push_back(adv[1]);
    return ex;
  }

 private:
  template <class T, std::size_t N>
  const T& pick(const T (&items)[N]) {
    return items[rng_() % N];
  }

  std::mt19937 rng_;
};

std::string phrase_table_text() {
  std::string t;
  auto line = [&](const std::string& src, const std::string& tgt, const char* probs) {
    t += src + " ||| " + tgt + " ||| " + probs + "\n";
  };
  for (const char* article : {"der", "die", "den"}) line(article, "the", "0.9 0.4");
  auto nouns = [&](std::span<const Noun> group) {
    for (const Noun& n : group) {
      line(n.source, n.english, "0.5 0.5");
      line(n.source, std::string("the ") + n.english, "0.5 0.5");
      line(std::string(n.article) + " " + n.source, std::string("the ") + n.english, "0.8 0.6");
    }
  };
  nouns(kSubjects);
  nouns(kObjects);
  for (const auto& p : kPlaces) line(p[0], p[1], "1 1");
  for (const Verb& v : kVerbs) {
    line(v.source, v.gerund, "0.35 0.35");
    line(v.source, std::string("is ") + v.gerund, "0.35 0.35");
    line(v.source, v.third_person, "0.3 0.3");
  }
  for (const auto& a : kAdverbs) line(a[0], a[1], "0.9 0.9");
  return t;
}

void write_lines(const std::filesystem::path& path, const TokenizedCorpus& corpus) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  for (const auto& s : corpus) out << join(s, " ") << '\n';
}

TokenizedCorpus read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  TokenizedCorpus out;
  std::string line;
  while (std::getline(in, line)) out.push_back(split_whitespace(line));
  return out;
}

}  // namespace

StyleCorpus generate_style_corpus(unsigned seed, std::size_t lm_sentences, std::size_t test_sentences) {
  StyleCorpus c;
  c.phrase_table = phrase_table_text();
  // LM text and test sets come from independent streams.
  Grammar lm_title(seed);
  Grammar lm_content(seed + 1);
  for (std::size_t i = 0; i < lm_sentences; ++i) {
    c.title_lm.push_back(lm_title.next().title_reference);
    c.content_lm.push_back(lm_content.next().content_reference);
  }
  Grammar test(seed + 2);
  for (std::size_t i = 0; i < test_sentences; ++i) {
    auto ex = test.next();
    c.title_test.sources.push_back(std::move(ex.title_source));
    c.title_test.references.push_back(std::move(ex.title_reference));
  }
  for (std::size_t i = 0; i < test_sentences; ++i) {
    auto ex = test.next();
    c.content_test.sources.push_back(std::move(ex.content_source));
    c.content_test.references.push_back(std::move(ex.content_reference));
  }
  return c;
}

void write_style_corpus(const StyleCorpus& corpus, const std::string& dir) {
  namespace fs = std::filesystem;
  const fs::path base(dir);
  fs::create_directories(base);
  std::ofstream(base / "phrases.txt") << corpus.phrase_table;
  write_lines(base / "title_lm.txt", corpus.title_lm);
  write_lines(base / "content_lm.txt", corpus.content_lm);
  write_lines(base / "title_test.src", corpus.title_test.sources);
  write_lines(base / "title_test.ref", corpus.title_test.references);
  write_lines(base / "content_test.src", corpus.content_test.sources);
  write_lines(base / "content_test.ref", corpus.content_test.references);
  std::ofstream(base / "engines.ini") << "[de.title]\n"
                                         "phrase_table = phrases.txt\n"
                                         "lm_corpus = title_lm.txt\n"
                                         "lm_order = 3\n"
                                         "\n"
                                         "[de.content]\n"
                                         "phrase_table = phrases.txt\n"
                                         "lm_corpus = content_lm.txt\n"
                                         "lm_order = 3\n";
}

TestSet load_test_set(const std::string& source_path, const std::string& reference_path) {
  return {read_lines(source_path), read_lines(reference_path)};
}

}  // namespace onts::evalkit
