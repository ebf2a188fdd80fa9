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

#include "onts/langmodel/model.hpp"

#include <cmath>
#include <fstream>

#include "onts/common/error.hpp"
#include "onts/common/strings.hpp"

namespace onts::langmodel {

namespace {

NgramKey make_key(std::span<const WordId> ids) {
  NgramKey key;
  key.size = static_cast<std::uint8_t>(ids.size());
  std::copy(ids.begin(), ids.end(), key.ids.begin());
  return key;
}

NgramKey prefix(const NgramKey& k) {
  NgramKey p = k;
  --p.size;
  return p;
}

NgramKey suffix(const NgramKey& k) {
  NgramKey s;
  s.size = static_cast<std::uint8_t>(k.size - 1);
  std::copy(k.ids.begin() + 1, k.ids.begin() + k.size, s.ids.begin());
  return s;
}

struct ContextStats {
  std::uint64_t total = 0;
  std::uint64_t types = 0;
};

}  // namespace

Vocabulary::Vocabulary() {
  add(kUnkToken);
  add(kBosToken);
  add(kEosToken);
}

WordId Vocabulary::add(std::string_view word) {
  auto [it, inserted] = ids_.emplace(std::string(word), static_cast<WordId>(words_.size()));
  if (inserted) words_.emplace_back(word);
  return it->second;
}

WordId Vocabulary::id(std::string_view word) const {
  const auto it = ids_.find(std::string(word));
  return it == ids_.end() ? kUnk : it->second;
}

LanguageModel LanguageModel::train(const Corpus& corpus, int order) {
  if (order < 1 || order > kMaxOrder)
    throw Error("language model order must be in 1.." + std::to_string(kMaxOrder));
  if (corpus.empty()) throw Error("cannot train a language model on an empty corpus");

  LanguageModel lm;
  lm.order_ = order;
  const auto n = static_cast<std::size_t>(order);
  std::vector<std::unordered_map<NgramKey, std::uint64_t, NgramKeyHash>> counts(n);
  std::vector<std::unordered_map<NgramKey, ContextStats, NgramKeyHash>> contexts(n);

  std::vector<WordId> ids;
  for (const auto& sentence : corpus) {
    ids.assign(n - 1, kBos);
    for (const auto& w : sentence) {
      if (w == kBosToken || w == kEosToken) throw Error("corpus contains a sentence marker: " + w);
      ids.push_back(lm.vocab_.add(w));
    }
    ids.push_back(kEos);
    for (std::size_t i = n - 1; i < ids.size(); ++i) {
      for (std::size_t k = 1; k <= n; ++k) {
        const NgramKey key = make_key(std::span(ids).subspan(i + 1 - k, k));
        auto& stats = contexts[k - 1][prefix(key)];
        if (++counts[k - 1][key] == 1) ++stats.types;
        ++stats.total;
      }
    }
  }

  // Predictable vocabulary: everything except <s>.
  const double uniform = 1.0 / static_cast<double>(lm.vocab_.size() - 1);
  std::vector<std::unordered_map<NgramKey, double, NgramKeyHash>> prob(n);
  for (std::size_t k = 1; k <= n; ++k) {
    for (const auto& [key, c] : counts[k - 1]) {
      const auto& h = contexts[k - 1].at(prefix(key));
      const double lower = k == 1 ? uniform : prob[k - 2].at(suffix(key));
      prob[k - 1][key] = (static_cast<double>(c) + static_cast<double>(h.types) * lower) /
                         static_cast<double>(h.total + h.types);
    }
  }
  {
    NgramKey unk;
    unk.size = 1;
    unk.ids[0] = kUnk;
    if (!prob[0].count(unk)) {
      const auto& h = contexts[0].at(NgramKey{});
      prob[0][unk] = static_cast<double>(h.types) * uniform / static_cast<double>(h.total + h.types);
    }
  }

  lm.tables_.resize(n);
  for (std::size_t k = 1; k <= n; ++k)
    for (const auto& [key, p] : prob[k - 1]) lm.tables_[k - 1][key].log_prob = std::log10(p);
  for (std::size_t k = 2; k <= n; ++k) {
    for (const auto& [ctx, h] : contexts[k - 1]) {
      const double alpha = static_cast<double>(h.types) / static_cast<double>(h.total + h.types);
      lm.tables_[k - 2][ctx].log_backoff = std::log10(alpha);
    }
  }
  return lm;
}

const LanguageModel::Entry* LanguageModel::find(const NgramKey& key) const {
  const auto& table = tables_[key.size - 1];
  const auto it = table.find(key);
  return it == table.end() ? nullptr : &it->second;
}

double LanguageModel::log_prob(std::span<const WordId> context, WordId w) const {
  const std::size_t max_ctx = static_cast<std::size_t>(order_) - 1;
  if (context.size() > max_ctx) context = context.subspan(context.size() - max_ctx);
  if (w >= vocab_.size()) w = kUnk;

  NgramKey key;
  double backoff = 0.0;
  for (std::size_t len = context.size();; --len) {
    const auto ctx = context.subspan(context.size() - len);
    std::copy(ctx.begin(), ctx.end(), key.ids.begin());
    key.ids[len] = w;
    key.size = static_cast<std::uint8_t>(len + 1);
    if (const Entry* e = find(key)) return backoff + e->log_prob;
    if (len == 0) break;
    key.size = static_cast<std::uint8_t>(len);
    if (const Entry* e = find(key)) backoff += e->log_backoff;
  }
  // Unreachable for trained or well-formed models: <unk> is always listed.
  return kLogZero;
}

double LanguageModel::log_prob(std::span<const std::string> context, std::string_view w) const {
  std::vector<WordId> ids;
  ids.reserve(context.size());
  for (const auto& c : context) ids.push_back(vocab_.id(c));
  return log_prob(ids, vocab_.id(w));
}

double LanguageModel::score_sentence(std::span<const std::string> tokens) const {
  std::vector<WordId> ids(static_cast<std::size_t>(order_) - 1, kBos);
  for (const auto& t : tokens) ids.push_back(vocab_.id(t));
  ids.push_back(kEos);
  double total = 0.0;
  for (std::size_t i = static_cast<std::size_t>(order_) - 1; i < ids.size(); ++i)
    total += log_prob(std::span(ids).first(i), ids[i]);
  return total;
}

std::vector<WordId> LanguageModel::predictable_words() const {
  std::vector<WordId> out;
  for (WordId id = 0; id < vocab_.size(); ++id)
    if (id != kBos) out.push_back(id);
  return out;
}

std::size_t LanguageModel::ngram_count(int n) const {
  if (n < 1 || n > order_) return 0;
  return tables_[static_cast<std::size_t>(n) - 1].size();
}

double perplexity(const LanguageModel& model, const Corpus& corpus) {
  double total = 0.0;
  std::size_t tokens = 0;
  for (const auto& s : corpus) {
    total += model.score_sentence(s);
    tokens += s.size() + 1;
  }
  if (tokens == 0) throw Error("perplexity of an empty corpus");
  return std::pow(10.0, -total / static_cast<double>(tokens));
}

Corpus read_corpus(std::istream& in) {
  Corpus corpus;
  std::string line;
  while (std::getline(in, line)) {
    auto tokens = split_whitespace(line);
    if (!tokens.empty()) corpus.push_back(std::move(tokens));
  }
  return corpus;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corpus " + path);
  return read_corpus(in);
}

}  // namespace onts::langmodel
