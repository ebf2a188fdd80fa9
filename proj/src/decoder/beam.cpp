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

#include <algorithm>
#include <chrono>
#include <cstring>
#include <unordered_map>

#include "onts/common/error.hpp"
#include "search_space.hpp"

namespace onts::decoder {

using detail::Option;
using detail::SearchSpace;
using detail::State;

std::string_view to_string(Origin o) {
  switch (o) {
    case Origin::kTable: return "table";
    case Origin::kForced: return "forced";
    case Origin::kUnknown: return "unknown";
  }
  return "";
}

double ScoreBreakdown::dot(const FeatureVector& weights) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < kFeatureCount; ++i) sum += weights[i] * features[i];
  return sum + unknown_penalty;
}

namespace {

struct Node {
  State state;
  double future = 0.0;
  std::size_t parent = 0;
  const Option* option = nullptr;
};

constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

class BeamSearch {
 public:
  explicit BeamSearch(const SearchSpace& space)
      : space_(space), n_(space.size()), stacks_(n_ + 1), index_(n_ + 1) {}

  TranslationResult run() {
    insert({space_.initial(), space_.future_cost(space_.initial().coverage), kRoot, nullptr});
    const std::size_t beam = space_.engine().config.beam_width;
    for (std::size_t k = 0; k < n_; ++k) {
      auto& stack = stacks_[k];
      if (stack.empty()) continue;
      std::stable_sort(stack.begin(), stack.end(), [&](std::size_t a, std::size_t b) {
        const Node& x = arena_[a];
        const Node& y = arena_[b];
        const double px = x.state.score + x.future;
        const double py = y.state.score + y.future;
        if (px != py) return px > py;
        if (x.state.score != y.state.score) return x.state.score > y.state.score;
        return x.state.target_length < y.state.target_length;
      });
      if (stack.size() > beam) stack.resize(beam);
      const std::vector<std::size_t> expanding = stack;
      for (std::size_t idx : expanding) expand(idx);
    }
    if (stacks_[n_].empty()) throw Error("decoder found no complete translation");
    const std::size_t best = stacks_[n_].front();
    std::vector<const Option*> steps;
    for (std::size_t i = best; i != kRoot; i = arena_[i].parent)
      if (arena_[i].option) steps.push_back(arena_[i].option);
    std::reverse(steps.begin(), steps.end());
    auto result = space_.result(steps, arena_[best].state);
    result.hypotheses = arena_.size();
    return result;
  }

 private:
  void expand(std::size_t idx) {
    for (std::size_t s = 0; s < n_; ++s) {
      for (std::size_t oi : space_.options_at(s)) {
        const Option& o = space_.options()[oi];
        const State& from = arena_[idx].state;
        if (!space_.allowed(from, o)) continue;
        State next = space_.apply(from, o);
        const double future = next.covered == n_ ? 0.0 : space_.future_cost(next.coverage);
        insert({std::move(next), future, idx, &o});
      }
    }
  }

  // Hypotheses that agree on coverage, last source position and LM context
  // have identical futures; only the best of them is kept. Complete
  // hypotheses all share one key.
  std::string key_of(const State& s) const {
    if (s.covered == n_) return {};
    const auto& words = s.coverage.words();
    const std::size_t ctx = static_cast<std::size_t>(space_.engine().lm->order()) - 1;
    std::string key(words.size() * sizeof(std::uint64_t) + sizeof(std::size_t) + ctx * sizeof(langmodel::WordId),
                    '\0');
    char* p = key.data();
    std::memcpy(p, words.data(), words.size() * sizeof(std::uint64_t));
    p += words.size() * sizeof(std::uint64_t);
    std::memcpy(p, &s.last_end, sizeof(std::size_t));
    p += sizeof(std::size_t);
    std::memcpy(p, s.context.data(), ctx * sizeof(langmodel::WordId));
    return key;
  }

  std::vector<std::string> target_of(std::size_t idx) const {
    std::vector<const Option*> steps;
    for (std::size_t i = idx; i != kRoot; i = arena_[i].parent)
      if (arena_[i].option) steps.push_back(arena_[i].option);
    std::vector<std::string> out;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it)
      out.insert(out.end(), (*it)->target->begin(), (*it)->target->end());
    return out;
  }

  bool better(std::size_t a, std::size_t b) const {
    const State& x = arena_[a].state;
    const State& y = arena_[b].state;
    if (x.score != y.score) return x.score > y.score;
    if (x.target_length != y.target_length) return x.target_length < y.target_length;
    return target_of(a) < target_of(b);
  }

  void insert(Node node) {
    const std::size_t k = node.state.covered;
    const std::string key = key_of(node.state);
    arena_.push_back(std::move(node));
    const std::size_t idx = arena_.size() - 1;
    auto [it, inserted] = index_[k].emplace(key, stacks_[k].size());
    if (inserted) {
      stacks_[k].push_back(idx);
    } else if (better(idx, stacks_[k][it->second])) {
      stacks_[k][it->second] = idx;
    }
  }

  const SearchSpace& space_;
  std::size_t n_;
  std::vector<Node> arena_;
  std::vector<std::vector<std::size_t>> stacks_;
  std::vector<std::unordered_map<std::string, std::size_t>> index_;
};

}  // namespace

TranslationResult translate(std::span<const std::string> tokens, std::span<const ConstrainedSpan> spans,
                            const TranslationEngine& engine) {
  const auto started = std::chrono::steady_clock::now();
  const SearchSpace space(tokens, spans, engine);
  TranslationResult result;
  if (!tokens.empty()) result = BeamSearch(space).run();
  result.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace onts::decoder
