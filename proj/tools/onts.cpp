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

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <sstream>

#include "onts/common/error.hpp"
#include "onts/common/strings.hpp"
#include "onts/common/unicode.hpp"
#include "onts/decoder/phrase_table.hpp"
#include "onts/decoder/translate.hpp"
#include "onts/evalkit/benchmark.hpp"
#include "onts/evalkit/bleu.hpp"
#include "onts/evalkit/style.hpp"
#include "onts/feedio/rss.hpp"
#include "onts/langmodel/model.hpp"
#include "onts/service/http.hpp"

using namespace onts;

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  return read_file(path);
}

evalkit::TokenizedCorpus read_tokenized(const std::string& path, bool lower) {
  std::istringstream in(read_input(path));
  evalkit::TokenizedCorpus out;
  std::string line;
  while (std::getline(in, line)) {
    auto tokens = split_whitespace(line);
    if (lower)
      for (auto& t : tokens) t = unicode::to_lower(t);
    out.push_back(std::move(tokens));
  }
  return out;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  return out;
}

struct ToggleFlags {
  int ne = -1, compound = -1, recase = -1, detok = -1, unk = -1;

  void add_to(CLI::App* app) {
    for (auto [name, flag] : {std::pair{"--ne", &ne}, {"--compound", &compound}, {"--recase", &recase},
                              {"--detok", &detok}, {"--unk", &unk}})
      app->add_option(name, *flag, "Enable (1) or disable (0) this pipeline stage")->check(CLI::Range(0, 1));
  }

  service::PipelineToggles apply(service::PipelineToggles t) const {
    if (ne >= 0) t.named_entity = ne;
    if (compound >= 0) t.compound = compound;
    if (recase >= 0) t.recaser = recase;
    if (detok >= 0) t.detokenizer = detok;
    if (unk >= 0) t.unknown_words = unk;
    return t;
  }
};

service::HttpServer* g_server = nullptr;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Categorize, annotate and translate news feeds"};
  app.require_subcommand(1);
  std::string config_path;
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Log pipeline progress to stderr");

  // serve
  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  std::string host;
  int port = -1;
  bool no_poll = false;
  serve->add_option("-c,--config", config_path, "Service configuration file")->required();
  serve->add_option("--host", host, "Override the configured host");
  serve->add_option("--port", port, "Override the configured port (0: any free port)");
  serve->add_flag("--no-poll", no_poll, "Do not start the feed poller");

  // translate
  auto* translate = app.add_subcommand("translate", "Translate an RSS document or plain text lines");
  std::string input, src_lang, style = "content";
  bool text_mode = false;
  ToggleFlags toggle_flags;
  translate->add_option("-c,--config", config_path, "Service configuration file")->required();
  translate->add_option("-i,--input", input, "Input file (default: stdin)");
  translate->add_option("--src", src_lang, "Source language override (required with --text)");
  translate->add_flag("--text", text_mode, "Input is plain text, one sentence per line");
  translate->add_option("--style", style, "Engine style for --text")->check(CLI::IsMember({"title", "content"}));
  toggle_flags.add_to(translate);

  // poll
  auto* poll = app.add_subcommand("poll", "Fetch feeds once into the article store");
  std::vector<std::string> feeds;
  std::string feed_lang;
  poll->add_option("-c,--config", config_path, "Service configuration file")->required();
  poll->add_option("--feed", feeds, "Feed URL (http only)")->required();
  poll->add_option("--lang", feed_lang, "Language for items that carry none");

  // eval
  auto* eval = app.add_subcommand("eval", "BLEU, style and speed experiments");
  eval->require_subcommand(1);
  bool json = false;
  auto* eval_bleu = eval->add_subcommand("bleu", "Corpus BLEU (lowercased, whitespace tokens)");
  std::string hyp_path, ref_path;
  eval_bleu->add_option("--hyp", hyp_path, "Hypothesis file, one sentence per line")->required();
  eval_bleu->add_option("--ref", ref_path, "Reference file, one sentence per line")->required();
  eval_bleu->add_flag("--json", json, "Print one JSON line");

  auto* eval_style = eval->add_subcommand("style", "2x2 title/content style matrix");
  std::string manifest;
  std::string lang = "de";
  eval_style->add_option("--manifest", manifest,
                         "Engine manifest; {title,content}_test.{src,ref} are read from its directory")
      ->required();
  eval_style->add_option("--lang", lang, "Source language of the engines");
  eval_style->add_flag("--json", json, "Print one JSON line");

  auto* eval_bench = eval->add_subcommand("bench", "Decoding speed over a sentence file");
  std::string engine_id;
  std::size_t threads = 4;
  eval_bench->add_option("--manifest", manifest, "Engine manifest")->required();
  eval_bench->add_option("--engine", engine_id, "Engine id, <lang>.<style>")->required();
  eval_bench->add_option("--input", input, "Tokenized source sentences, one per line")->required();
  eval_bench->add_option("--threads", threads, "Worker pool size for the throughput run")->check(CLI::PositiveNumber);
  eval_bench->add_flag("--json", json, "Print one JSON line");

  // lm train
  auto* lm = app.add_subcommand("lm", "Language models");
  lm->require_subcommand(1);
  auto* lm_train = lm->add_subcommand("train", "Train a Witten-Bell model and write ARPA");
  std::string output;
  int order = 3;
  lm_train->add_option("--input", input, "Tokenized corpus, one sentence per line")->required();
  lm_train->add_option("--output", output, "ARPA output path")->required();
  lm_train->add_option("--order", order, "N-gram order")->check(CLI::Range(1, static_cast<int>(langmodel::kMaxOrder)));
  bool lowercase = false;
  lm_train->add_flag("--lowercase", lowercase, "Lowercase the corpus first");

  // phrases train
  auto* phrases = app.add_subcommand("phrases", "Phrase tables");
  phrases->require_subcommand(1);
  auto* phrases_train = phrases->add_subcommand("train", "Co-occurrence word table from parallel text");
  std::string source_path, target_path;
  std::size_t max_options = decoder::kDefaultMaxOptions;
  phrases_train->add_option("--source", source_path, "Source sentences")->required();
  phrases_train->add_option("--target", target_path, "Target sentences, line-aligned")->required();
  phrases_train->add_option("--output", output, "Phrase table output path")->required();
  phrases_train->add_option("--max-options", max_options, "Options kept per source phrase")->check(CLI::PositiveNumber);

  // fixture
  auto* fixture = app.add_subcommand("style-fixture", "Write the synthetic title/content style corpus");
  unsigned seed = 2011;
  fixture->add_option("--output", output, "Output directory")->required();
  fixture->add_option("--seed", seed, "Generator seed");

  CLI11_PARSE(app, argc, argv);
  spdlog::set_default_logger(spdlog::stderr_color_mt("onts"));
  spdlog::set_level(verbose || serve->parsed() ? spdlog::level::info : spdlog::level::warn);

  try {
    if (serve->parsed() || translate->parsed() || poll->parsed()) {
      auto config = service::ServiceConfig::load(config_path);
      service::Pipeline pipeline(service::PipelineResources::load(config), config.workers);
      if (translate->parsed()) {
        const auto toggles = toggle_flags.apply(config.toggles);
        const std::string text = read_input(input);
        if (text_mode) {
          if (src_lang.empty()) throw Error("--text needs --src");
          const auto& engine = pipeline.engines().get(src_lang, decoder::parse_style(style));
          std::istringstream lines(text);
          std::string line;
          while (std::getline(lines, line)) {
            const auto prepared = pipeline.prepare(line, src_lang, toggles);
            std::cout << pipeline.translate_sentence(prepared, engine, toggles).text << '\n';
          }
          return 0;
        }
        auto feed = feedio::parse_rss(text, src_lang);
        if (!src_lang.empty())
          for (auto& item : feed.items) item.source_lang = src_lang;
        for (const auto& s : feed.skipped) spdlog::warn("item {} skipped: {}", s.item_index, s.reason);
        const auto items = pipeline.process_batch(std::move(feed.items), toggles);
        std::cout << feedio::emit_rss(items, {feedio::EmitMode::kTranslated});
        return 0;
      }
      service::ArticleStore store(config.store_path);
      if (poll->parsed()) {
        std::vector<service::FeedSubscription> subs;
        for (const auto& url : feeds) subs.push_back({url, service::kDefaultPollSeconds, std::nullopt, feed_lang});
        for (const auto& r : service::poll_feeds(subs, store, pipeline, service::http_fetch, service::Clock::now()))
          std::cout << r.url << "\tnew=" << r.new_items << "\tduplicates=" << r.duplicates << "\terrors=" << r.errors
                    << (r.message.empty() ? "" : "\t" + r.message) << '\n';
        return 0;
      }
      service::FeedPoller poller(store, pipeline);
      service::Endpoints endpoints(pipeline, store, poller, config.toggles);
      service::HttpServer server(endpoints);
      const int bound = server.bind(host.empty() ? config.host : host, port >= 0 ? port : config.port);
      spdlog::info("listening on {}:{}", host.empty() ? config.host : host, bound);
      if (!no_poll) poller.start(std::chrono::seconds(config.poll_tick_seconds));
      g_server = &server;
      std::signal(SIGINT, [](int) { g_server->stop(); });
      std::signal(SIGTERM, [](int) { g_server->stop(); });
      server.serve();
      poller.stop();
      return 0;
    }

    if (eval_bleu->parsed()) {
      const auto r = evalkit::bleu(read_tokenized(hyp_path, true), read_tokenized(ref_path, true));
      if (json) {
        std::cout << nlohmann::json{{"bleu", r.bleu},
                                    {"precisions", r.precisions},
                                    {"brevity_penalty", r.brevity_penalty},
                                    {"hypothesis_length", r.hypothesis_length},
                                    {"reference_length", r.reference_length}}
                         .dump()
                  << '\n';
      } else {
        std::printf("BLEU = %.4f (p1 %.4f, p2 %.4f, p3 %.4f, p4 %.4f, BP %.4f, hyp %zu, ref %zu)\n", r.bleu,
                    r.precisions[0], r.precisions[1], r.precisions[2], r.precisions[3], r.brevity_penalty,
                    r.hypothesis_length, r.reference_length);
      }
      return 0;
    }
    if (eval_style->parsed()) {
      const auto registry = decoder::EngineRegistry::load_manifest(manifest);
      const std::string dir = std::filesystem::path(manifest).parent_path().string();
      auto set = [&](const char* name) {
        return evalkit::load_test_set(dir + "/" + name + "_test.src", dir + "/" + name + "_test.ref");
      };
      const auto m = evalkit::style_experiment(registry.get(lang, decoder::Style::kTitle),
                                               registry.get(lang, decoder::Style::kContent), set("title"),
                                               set("content"));
      if (json) {
        std::cout << nlohmann::json{{"title_engine", {{"title_set", m.title_on_title()}, {"content_set", m.title_on_content()}}},
                                    {"content_engine", {{"title_set", m.content_on_title()}, {"content_set", m.content_on_content()}}},
                                    {"diagonal_dominant", m.diagonal_dominant()}}
                         .dump()
                  << '\n';
      } else {
        std::printf("%-16s %10s %12s\n", "engine \\ set", "title", "content");
        std::printf("%-16s %10.4f %12.4f\n", "title", m.title_on_title(), m.title_on_content());
        std::printf("%-16s %10.4f %12.4f\n", "content", m.content_on_title(), m.content_on_content());
        std::printf("matched style wins: %s\n", m.diagonal_dominant() ? "yes" : "no");
      }
      return 0;
    }
    if (eval_bench->parsed()) {
      const auto registry = decoder::EngineRegistry::load_manifest(manifest);
      const auto dot = engine_id.find('.');
      if (dot == std::string::npos) throw Error("engine id must be <lang>.<style>");
      const auto& engine = registry.get(engine_id.substr(0, dot), decoder::parse_style(engine_id.substr(dot + 1)));
      const auto r = evalkit::benchmark(engine, read_tokenized(input, true), threads);
      if (json) {
        std::cout << evalkit::to_json(r) << '\n';
      } else {
        std::printf("sentences %zu, chars %zu\nmean %.6f s/sentence, p95 %.6f s, %.5f ms/char\n"
                    "pool of %zu: %.3f s, %.1f sentences/s\n",
                    r.sentences, r.characters, r.mean_seconds, r.p95_seconds, r.ms_per_char, r.pool_threads,
                    r.pool_seconds, r.pool_sentences_per_second);
      }
      return 0;
    }
    if (lm_train->parsed()) {
      auto corpus = read_tokenized(input, lowercase);
      const auto model = langmodel::LanguageModel::train(corpus, order);
      auto out = open_output(output);
      model.write_arpa(out);
      std::printf("perplexity on training text: %.4f\n", langmodel::perplexity(model, corpus));
      return 0;
    }
    if (phrases_train->parsed()) {
      const auto table = decoder::train_cooccurrence(read_tokenized(source_path, true),
                                                     read_tokenized(target_path, true), max_options);
      auto out = open_output(output);
      table.write(out);
      return 0;
    }
    if (fixture->parsed()) {
      evalkit::write_style_corpus(evalkit::generate_style_corpus(seed), output);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (line " << e.line() << ", column " << e.column() << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
