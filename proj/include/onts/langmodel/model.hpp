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

#include <algorithm>
#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace onts::langmodel {

using WordId = std::uint32_t;

inline constexpr WordId kUnk = 0;
inline constexpr WordId kBos = 1;
inline constexpr WordId kEos = 2;
inline constexpr std::string_view kUnkToken = "<unk>";
inline constexpr std::string_view kBosToken = "<s>";
inline constexpr std::string_view kEosToken = "</s>";
inline constexpr int kMaxOrder = 5;

// log10 value used for n-grams that exist only as contexts (e.g. "<s>").
inline constexpr double kLogZero = -99.0;

using Sentence = std::vector<std::string>;
using Corpus = std::vector<Sentence>;

class Vocabulary {
 public:
  Vocabulary();

  WordId add(std::string_view word);
  // kUnk for words never added.
  WordId id(std::string_view word) const;
  bool contains(std::string_view word) const { return ids_.count(std::string(word)) > 0; }
  const std::string& word(WordId id) const { return words_.at(id); }
  std::size_t size() const { return words_.size(); }

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, WordId> ids_;
};

struct NgramKey {
  std::array<WordId, kMaxOrder> ids{};
  std::uint8_t size = 0;

  bool operator==(const NgramKey& o) const {
    return size == o.size && std::equal(ids.begin(), ids.begin() + size, o.ids.begin());
  }
};

struct NgramKeyHash {
  std::size_t operator()(const NgramKey& k) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull ^ k.size;
    for (std::uint8_t i = 0; i < k.size; ++i) h = (h ^ k.ids[i]) * 0x100000001b3ull;
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// Interpolated Witten-Bell n-gram model:
//   p(w|h) = (c(h,w) + T(h) p(w|h')) / (c(h) + T(h))
// with T(h) the number of distinct successors of h, falling back to the
// shorter context when c(h) = 0, down to the uniform distribution over the
// predictable vocabulary (observed words, </s>, <unk>). The model is stored in
// the equivalent backoff form: listed n-grams carry their interpolated
// probability and contexts carry alpha(h) = T(h) / (c(h) + T(h)).
class LanguageModel {
 public:
  // Throws onts::Error for an empty corpus or an order outside 1..5.
  static LanguageModel train(const Corpus& corpus, int order = 3);

  static LanguageModel read_arpa(std::istream& in);
  static LanguageModel load_arpa(const std::string& path);
  void write_arpa(std::ostream& out) const;

  int order() const { return order_; }
  const Vocabulary& vocabulary() const { return vocab_; }
  WordId id(std::string_view word) const { return vocab_.id(word); }

  // log10 p(w | context). Only the last order-1 context words are used.
  double log_prob(std::span<const WordId> context, WordId w) const;
  double log_prob(std::span<const std::string> context, std::string_view w) const;

  // Sum of log10 probabilities of the tokens and the end marker, starting
  // from order-1 begin markers.
  double score_sentence(std::span<const std::string> tokens) const;

  // Every id that can be predicted: the vocabulary except <s>.
  std::vector<WordId> predictable_words() const;

  std::size_t ngram_count(int n) const;

 private:
  struct Entry {
    double log_prob = kLogZero;
    double log_backoff = 0.0;
  };

  LanguageModel() = default;
  const Entry* find(const NgramKey& key) const;

  int order_ = 0;
  Vocabulary vocab_;
  std::vector<std::unordered_map<NgramKey, Entry, NgramKeyHash>> tables_;  // index n-1
};

// 10^(-total score / scored tokens), end markers counted as tokens.
double perplexity(const LanguageModel& model, const Corpus& corpus);

// One sentence per line, whitespace-separated tokens; blank lines skipped.
Corpus read_corpus(std::istream& in);
Corpus load_corpus(const std::string& path);

}  // namespace onts::langmodel
