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

#include <array>
#include <string>

#include "onts/decoder/engine.hpp"
#include "onts/evalkit/bleu.hpp"

namespace onts::evalkit {

struct TestSet {
  TokenizedCorpus sources;
  TokenizedCorpus references;
};

// BLEU of each engine (rows: title, content) on each test set (columns:
// title set, content set).
struct StyleMatrix {
  std::array<std::array<double, 2>, 2> bleu{};

  double title_on_title() const { return bleu[0][0]; }
  double content_on_title() const { return bleu[1][0]; }
  double title_on_content() const { return bleu[0][1]; }
  double content_on_content() const { return bleu[1][1]; }
  // Matched engine beats the mismatched one on both sets by more than `margin`.
  bool diagonal_dominant(double margin = 0.0) const;
};

// Translates both test sets with both engines (no constrained spans) and
// scores them. Throws onts::Error for an empty set or a set whose source and
// reference counts differ.
StyleMatrix style_experiment(const decoder::TranslationEngine& title_engine,
                             const decoder::TranslationEngine& content_engine, const TestSet& title_set,
                             const TestSet& content_set);

// Toy German-like source with two English target styles. Headlines drop
// articles, use bare gerunds and no copula ("minister visiting factory today");
// content sentences are full clauses ("the minister is visiting the factory
// today"). One phrase table serves both styles; only the LM corpora differ.
struct StyleCorpus {
  std::string phrase_table;  // phrase-table text
  TokenizedCorpus title_lm;
  TokenizedCorpus content_lm;
  TestSet title_test;
  TestSet content_test;
};

StyleCorpus generate_style_corpus(unsigned seed = 2011, std::size_t lm_sentences = 400,
                                  std::size_t test_sentences = 100);

// Writes phrases.txt, {title,content}_lm.txt, {title,content}_test.{src,ref}
// and an engines.ini manifest with [de.title] and [de.content] sections.
void write_style_corpus(const StyleCorpus& corpus, const std::string& dir);

// Reads a test set from parallel .src/.ref files (one sentence per line).
TestSet load_test_set(const std::string& source_path, const std::string& reference_path);

}  // namespace onts::evalkit
