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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bleu_oracle.hpp"
#include "category_cases.hpp"
#include "category_oracle.hpp"
#include "onts/categorizer/category.hpp"
#include "onts/common/strings.hpp"
#include "onts/common/unicode.hpp"
#include "onts/decoder/translate.hpp"
#include "onts/evalkit/benchmark.hpp"
#include "onts/evalkit/bleu.hpp"
#include "onts/evalkit/style.hpp"
#include "onts/feedio/rss.hpp"
#include "onts/langmodel/model.hpp"
#include "onts/service/pipeline.hpp"
#include "onts/textprep/compound.hpp"
#include <spdlog/spdlog.h>
#include "toy_decoder.hpp"

using namespace onts;
using Clock = std::chrono::steady_clock;

namespace {

const std::string kData = ONTS_DATA_DIR;
const std::string kFixtureSentence = "Le ministre Bruno Le Maire a déclaré que la croissance est forte.";

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects the first few failure messages of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ < 3) {
      if (!notes_.empty()) notes_ += "; ";
      notes_ += what;
    }
  }
  Outcome done(std::string summary) const {
    if (failures_ == 0) return {true, std::move(summary)};
    return {false, std::to_string(failures_) + " failure(s): " + notes_};
  }

 private:
  std::size_t failures_ = 0;
  std::string notes_;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

const service::Pipeline& desk_pipeline() {
  static const service::Pipeline p = [] {
    const auto config = service::ServiceConfig::load(kData + "/desk/desk.ini");
    return service::Pipeline(service::PipelineResources::load(config), 8);
  }();
  return p;
}

std::vector<NewsItem> desk_corpus() {
  return feedio::parse_rss(read_file(kData + "/desk/corpus/articles.rss")).items;
}

NewsItem fixture_item() {
  NewsItem item;
  item.id = "fixture";
  item.source_lang = "fr";
  item.title = "Le gouvernement prépare le budget";
  item.body = kFixtureSentence;
  return item;
}

Outcome decoder_oracle() {
  Check c;
  testing::ToyDecoder toy(2011);
  const auto wide = toy.engine(10000, 8);
  const auto standard = toy.engine(100, 8);
  const auto t0 = Clock::now();
  std::size_t exact = 0, default_hits = 0;
  for (int i = 0; i < 100; ++i) {
    const auto s = toy.sentence(8);
    const double oracle = decoder::decode_exhaustive(s, {}, wide).score;
    if (decoder::translate(s, {}, wide).score == oracle) ++exact;
    else c.expect(false, "wide beam differs on: " + join(s, " "));
    if (decoder::translate(s, {}, standard).score == oracle) ++default_hits;
  }
  const double secs = seconds_since(t0);
  c.expect(default_hits >= 95, "B=100 matched " + std::to_string(default_hits) + "/100");
  c.expect(secs < 60.0, "took " + fmt("%.1f", secs) + " s");
  return c.done("B=10000 exact " + std::to_string(exact) + "/100, B=100 " + std::to_string(default_hits) +
                "/100, " + fmt("%.2f", secs) + " s");
}

Outcome entity_protection() {
  Check c;
  const auto& p = desk_pipeline();
  std::size_t verbatim = 0;
  for (int run = 0; run < 100; ++run) {
    const auto out = p.process_item(fixture_item(), service::PipelineToggles{});
    if (out.enrichment && out.enrichment->translated_body.find("Bruno Le Maire") != std::string::npos) ++verbatim;
  }
  c.expect(verbatim == 100, "verbatim in " + std::to_string(verbatim) + "/100 runs");

  const auto& table = *p.engines().get("fr", decoder::Style::kContent).table;
  const std::string maire[] = {"maire"};
  bool has_mayor = false;
  if (const auto* options = table.find(maire))
    for (const auto& opt : *options) has_mayor |= opt.target == std::vector<std::string>{"mayor"};
  c.expect(has_mayor, "table lacks maire -> mayor");

  service::PipelineToggles off;
  off.named_entity = false;
  const auto body = p.process_item(fixture_item(), off).enrichment->translated_body;
  c.expect(body.find("Bruno Le Maire") == std::string::npos && body.find("mayor") != std::string::npos,
           "NE off gave: " + body);
  return c.done("100/100 verbatim; NE off: \"" + body + "\"");
}

Outcome style_matching() {
  Check c;
  const std::string dir = kData + "/style";
  const auto registry = decoder::EngineRegistry::load_manifest(dir + "/engines.ini");
  const auto m = evalkit::style_experiment(registry.get("de", decoder::Style::kTitle),
                                           registry.get("de", decoder::Style::kContent),
                                           evalkit::load_test_set(dir + "/title_test.src", dir + "/title_test.ref"),
                                           evalkit::load_test_set(dir + "/content_test.src", dir + "/content_test.ref"));
  const double title_margin = m.title_on_title() - m.content_on_title();
  const double content_margin = m.content_on_content() - m.title_on_content();
  c.expect(title_margin > 0.005, "title-set margin " + fmt("%.4f", title_margin));
  c.expect(content_margin > 0.005, "content-set margin " + fmt("%.4f", content_margin));
  return c.done("title set " + fmt("%.4f", m.title_on_title()) + " vs " + fmt("%.4f", m.content_on_title()) +
                ", content set " + fmt("%.4f", m.content_on_content()) + " vs " + fmt("%.4f", m.title_on_content()));
}

evalkit::TokenizedCorpus lines(std::initializer_list<const char*> text) {
  evalkit::TokenizedCorpus out;
  for (const char* l : text) out.push_back(split_whitespace(l));
  return out;
}

Outcome bleu_correctness() {
  Check c;
  std::mt19937 rng(77);
  auto random_corpus = [&](std::size_t sentences, std::size_t vocab, std::size_t max_len = 9) {
    evalkit::TokenizedCorpus out(sentences);
    for (auto& s : out)
      for (std::size_t len = 1 + rng() % max_len; len > 0; --len) s.push_back("w" + std::to_string(rng() % vocab));
    return out;
  };
  const auto x = lines({"the cat sat on the mat", "a dog barked at the moon"});
  c.expect(std::abs(evalkit::bleu(x, x).bleu - 1.0) <= 1e-12, "BLEU(x,x) != 1");
  for (int i = 0; i < 20; ++i) {
    const auto y = random_corpus(1 + rng() % 6, 30);
    bool has_four = false;
    for (const auto& s : y) has_four |= s.size() >= 4;
    if (has_four) c.expect(std::abs(evalkit::bleu(y, y).bleu - 1.0) <= 1e-12, "random BLEU(x,x) != 1");
  }
  double worst = 0.0;
  std::size_t nonzero = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    // Small vocabularies and long sentences so most corpora share 4-grams.
    const std::size_t vocab = 2 + rng() % 2;
    const auto hyp = random_corpus(n, vocab, 14);
    const auto ref = random_corpus(n, vocab, 14);
    const double score = evalkit::bleu(hyp, ref).bleu;
    if (score > 0.0) ++nonzero;
    const double diff = std::abs(score - testing::brute_force_bleu(hyp, ref));
    worst = std::max(worst, diff);
    c.expect(diff <= 1e-9, "random corpus " + std::to_string(trial) + " differs by " + fmt("%.3g", diff));
  }
  const auto clipped = evalkit::bleu(lines({"the the the the"}), lines({"the cat sat down"}));
  c.expect(std::abs(clipped.precisions[0] - 0.25) <= 1e-9 && clipped.bleu == 0.0, "clipping case");
  const auto brevity = evalkit::bleu(lines({"a b c d"}), lines({"a b c d e f"}));
  c.expect(std::abs(brevity.bleu - std::exp(-0.5)) <= 1e-9, "brevity case");
  const auto partial = evalkit::bleu(lines({"a b c d x"}), lines({"a b c d e"}));
  const double expected = std::exp((std::log(0.8) + std::log(0.75) + std::log(2.0 / 3) + std::log(0.5)) / 4);
  c.expect(std::abs(partial.bleu - expected) <= 1e-9, "partial-match case");
  return c.done("identity, 50 random corpora (" + std::to_string(nonzero) + " nonzero, max diff " + fmt("%.2g", worst) +
                "), 3 hand cases");
}

Outcome lm_normalization() {
  Check c;
  std::mt19937 rng(3);
  langmodel::Corpus corpus;
  for (int i = 0; i < 80; ++i) {
    langmodel::Sentence s;
    for (std::size_t n = rng() % 9; n > 0; --n) s.push_back("w" + std::to_string(rng() % 15));
    corpus.push_back(std::move(s));
  }
  const auto lm = langmodel::LanguageModel::train(corpus, 3);
  const auto words = lm.predictable_words();
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    // Context words drawn from the full vocabulary (including <s>), so some
    // contexts are unseen and exercise the backoff path.
    std::vector<langmodel::WordId> ctx(2);
    for (auto& w : ctx) w = static_cast<langmodel::WordId>(rng() % lm.vocabulary().size());
    double total = 0.0;
    for (auto w : words) total += std::pow(10.0, lm.log_prob(ctx, w));
    worst = std::max(worst, std::abs(total - 1.0));
  }
  c.expect(worst <= 1e-9, "mass off by " + fmt("%.3g", worst));
  const langmodel::Corpus single = {split_whitespace("the minister visits the new factory in paris today")};
  const double ppl = langmodel::perplexity(langmodel::LanguageModel::train(single, 3), single);
  c.expect(ppl < 1.5, "self-perplexity " + fmt("%.4f", ppl));
  return c.done("20 contexts within " + fmt("%.2g", worst) + "; self-perplexity " + fmt("%.4f", ppl));
}

Outcome categorizer_semantics() {
  Check c;
  std::size_t cases = 0;
  for (const auto& k : testing::kCategoryCases) {
    ++cases;
    const bool got = categorizer::evaluate(categorizer::parse_definition(k.definition), split_whitespace(k.document)).matched;
    c.expect(got == k.expected, std::string("case \"") + k.definition + "\" on \"" + k.document + "\"");
  }
  testing::CategoryFuzzer fuzz(2011);
  for (int i = 0; i < 200; ++i) {
    const auto src = fuzz.definition();
    const auto doc = fuzz.document(50);
    const auto def = categorizer::parse_definition(src);
    c.expect(categorizer::evaluate(def, doc).matched == testing::oracle_eval(*def.rule, doc), "random pair: " + src);
  }
  return c.done(std::to_string(cases) + " table cases, 200 random pairs");
}

Outcome compound_splitter() {
  Check c;
  textprep::FrequencyTable f;
  f.add("aktion", 500);
  f.add("plan", 400);
  f.add("aktionsplan", 2);
  f.add("frei", 100);
  f.add("tag", 300);
  f.add("freitag", 5000);
  c.expect(textprep::split_compound("aktionsplan", f) == std::vector<std::string>{"aktion", "plan"}, "aktionsplan");
  c.expect(textprep::split_compound("freitag", f) == std::vector<std::string>{"freitag"}, "freitag");

  // Frequent one- and two-letter entries tempt short splits.
  std::mt19937 rng(1000);
  const std::u32string alphabet = U"aeinrstäöü";
  textprep::FrequencyTable g;
  auto utf8 = [](const std::u32string& s) {
    std::string out;
    for (char32_t ch : s) out += unicode::encode(ch);
    return out;
  };
  auto random_word = [&](std::size_t len) {
    std::u32string w;
    for (std::size_t i = 0; i < len; ++i) w += alphabet[rng() % alphabet.size()];
    return w;
  };
  std::vector<std::u32string> vocab;
  for (int i = 0; i < 80; ++i) {
    const auto w = random_word(1 + rng() % 6);
    vocab.push_back(w);
    g.add(utf8(w), w.size() < 3 ? 100000 : 1 + rng() % 1000);
  }
  std::size_t split_tokens = 0;
  for (int n = 0; n < 1000; ++n) {
    std::u32string token;
    for (std::size_t parts = 1 + rng() % 3; parts > 0; --parts) token += vocab[rng() % vocab.size()];
    const auto result = textprep::split_compound(utf8(token), g);
    if (result.size() > 1) ++split_tokens;
    if (result.size() > 1)
      for (const auto& part : result) c.expect(unicode::char_count(part) >= 3, "short part in " + utf8(token));
  }
  return c.done("fixtures split as stated; 1000 random tokens (" + std::to_string(split_tokens) +
                " split), no part under 3 characters");
}

bool same_enrichment(const NewsItem& a, const NewsItem& b) {
  if (!a.enrichment || !b.enrichment) return false;
  return a.enrichment->translated_title == b.enrichment->translated_title &&
         a.enrichment->translated_body == b.enrichment->translated_body &&
         a.enrichment->unknown_words == b.enrichment->unknown_words &&
         a.enrichment->engine_ids == b.enrichment->engine_ids && a.categories == b.categories;
}

Outcome pipeline_concurrency() {
  Check c;
  const auto corpus = desk_corpus();
  c.expect(corpus.size() == 50, "corpus has " + std::to_string(corpus.size()) + " items");
  const auto serial = desk_pipeline().process_batch(corpus, service::PipelineToggles{}, 1);
  const auto parallel = desk_pipeline().process_batch(corpus, service::PipelineToggles{}, 8);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    c.expect(same_enrichment(serial[i], parallel[i]), "item " + serial[i].id + " differs");

  feedio::EmitOptions options;
  options.mode = feedio::EmitMode::kTranslated;
  const auto reparsed = feedio::parse_rss(feedio::emit_rss(parallel, options)).items;
  c.expect(reparsed.size() == parallel.size(), "round trip lost items");
  for (std::size_t i = 0; i < std::min(reparsed.size(), parallel.size()); ++i)
    c.expect(reparsed[i] == parallel[i], "item " + parallel[i].id + " changed in RSS round trip");
  return c.done("50 articles, 8 workers identical to serial; translated RSS round-trips");
}

Outcome throughput_accounting() {
  Check c;
  const auto& p = desk_pipeline();
  double worst = 0.0;
  for (const auto& item : desk_corpus()) {
    const auto t0 = Clock::now();
    const auto out = p.process_item(item, service::PipelineToggles{});
    const double wall_ms = seconds_since(t0) * 1000.0;
    const double chars = static_cast<double>(unicode::char_count(item.title) + unicode::char_count(item.body));
    const double reported_ms = out.enrichment->ms_per_char * chars;
    worst = std::max(worst, std::abs(reported_ms - wall_ms));
    c.expect(reported_ms > 0.0 && std::abs(reported_ms - wall_ms) <= 5.0,
             item.id + ": reported " + fmt("%.2f", reported_ms) + " ms vs wall " + fmt("%.2f", wall_ms));
  }

  testing::ToyDecoder toy(99);
  std::vector<std::vector<std::string>> sentences;
  for (int i = 0; i < 2000; ++i) sentences.push_back(toy.sentence(12));
  const auto report = evalkit::benchmark(toy.engine(100, 6), sentences, 4);
  c.expect(report.sentences == 2000, "benchmark covered " + std::to_string(report.sentences) + " sentences");
  c.expect(report.mean_seconds > 0.0 && std::isfinite(report.mean_seconds), "mean s/sentence not positive");
  return c.done("50 articles within " + fmt("%.3f", worst) + " ms; 2000-sentence benchmark mean " +
                fmt("%.6f", report.mean_seconds) + " s/sentence");
}

}  // namespace

int main() {
  spdlog::set_level(spdlog::level::warn);
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"decoder oracle equivalence", decoder_oracle},
      {"entity protection", entity_protection},
      {"style matching", style_matching},
      {"BLEU correctness", bleu_correctness},
      {"LM normalization", lm_normalization},
      {"categorizer semantics", categorizer_semantics},
      {"compound splitter", compound_splitter},
      {"pipeline determinism and concurrency", pipeline_concurrency},
      {"throughput accounting", throughput_accounting},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s  %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
