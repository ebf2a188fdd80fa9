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

#include <chrono>
#include <optional>

#include "onts/common/error.hpp"
#include "search_space.hpp"

namespace onts::decoder {

using detail::Option;
using detail::SearchSpace;
using detail::State;

namespace {

// Depth-first enumeration of every derivation. When every step can only
// lower the score (non-negative weights, non-positive unknown penalty), a
// partial derivation already scoring strictly below the best complete one is
// abandoned; this is exact because its completions can only score lower.
class Enumerator {
 public:
  Enumerator(const SearchSpace& space, std::size_t max_nodes) : space_(space), max_nodes_(max_nodes) {
    const auto& config = space.engine().config;
    monotone_ = config.unknown_penalty <= 0.0;
    for (double w : config.weights) monotone_ = monotone_ && w >= 0.0;
  }

  TranslationResult run() {
    visit(space_.initial());
    if (!best_state_) throw Error("no complete derivation exists");
    return space_.result(best_steps_, *best_state_);
  }

 private:
  void visit(const State& state) {
    if (++nodes_ > max_nodes_)
      throw Error("exhaustive decoding exceeded " + std::to_string(max_nodes_) + " partial derivations");
    if (state.covered == space_.size()) {
      std::vector<std::string> target;
      for (const Option* o : steps_) target.insert(target.end(), o->target->begin(), o->target->end());
      if (!best_state_ || detail::better_final(state.score, target, best_state_->score, best_target_)) {
        best_state_ = state;
        best_target_ = std::move(target);
        best_steps_ = steps_;
      }
      return;
    }
    if (monotone_ && best_state_ && state.score < best_state_->score) return;
    for (std::size_t s = 0; s < space_.size(); ++s) {
      for (std::size_t oi : space_.options_at(s)) {
        const Option& o = space_.options()[oi];
        if (!space_.allowed(state, o)) continue;
        steps_.push_back(&o);
        visit(space_.apply(state, o));
        steps_.pop_back();
      }
    }
  }

  const SearchSpace& space_;
  std::size_t max_nodes_;
  bool monotone_ = false;
  std::size_t nodes_ = 0;
  std::vector<const Option*> steps_;
  std::optional<State> best_state_;
  std::vector<std::string> best_target_;
  std::vector<const Option*> best_steps_;
};

}  // namespace

TranslationResult decode_exhaustive(std::span<const std::string> tokens, std::span<const ConstrainedSpan> spans,
                                    const TranslationEngine& engine, std::size_t max_tokens,
                                    std::size_t max_nodes) {
  if (tokens.size() > max_tokens)
    throw Error("exhaustive decoding is limited to " + std::to_string(max_tokens) + " tokens, got " +
                std::to_string(tokens.size()));
  const auto started = std::chrono::steady_clock::now();
  const SearchSpace space(tokens, spans, engine);
  TranslationResult result;
  if (!tokens.empty()) result = Enumerator(space, max_nodes).run();
  result.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace onts::decoder
