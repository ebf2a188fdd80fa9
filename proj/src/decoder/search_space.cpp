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

#include "search_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "onts/common/error.hpp"
#include "onts/common/unicode.hpp"

namespace onts::decoder::detail {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::size_t distance(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

}  // namespace

SearchSpace::SearchSpace(std::span<const std::string> tokens, std::span<const ConstrainedSpan> spans,
                         const TranslationEngine& engine)
    : engine_(engine),
      lm_(*engine.lm),
      n_(tokens.size()),
      context_size_(static_cast<std::size_t>(engine.lm->order()) - 1),
      spans_(spans.begin(), spans.end()),
      by_start_(tokens.size()),
      unit_end_(tokens.size()) {
  std::sort(spans_.begin(), spans_.end(),
            [](const ConstrainedSpan& a, const ConstrainedSpan& b) { return a.start < b.start; });
  std::vector<std::size_t> in_span(n_, kNone);
  for (std::size_t k = 0; k < spans_.size(); ++k) {
    const auto& s = spans_[k];
    if (s.start >= s.end || s.end > n_)
      throw Error("constrained span [" + std::to_string(s.start) + "," + std::to_string(s.end) +
                  ") outside a sentence of " + std::to_string(n_) + " tokens");
    if (s.forced_target.empty()) throw Error("constrained span with empty forced target");
    if (k > 0 && spans_[k - 1].end > s.start) throw Error("overlapping constrained spans");
    for (std::size_t i = s.start; i < s.end; ++i) in_span[i] = k;
  }

  for (const auto& s : spans_) {
    Option o{s.start, s.end, &s.forced_target, {}, 0.0, 0.0, Origin::kForced};
    for (const auto& t : s.forced_target) o.lm_ids.push_back(lm_.id(unicode::to_lower(t)));
    add_option(std::move(o));
  }
  const PhraseTable& table = *engine.table;
  for (std::size_t i = 0; i < n_; ++i) {
    unit_end_[i] = in_span[i] == kNone ? i + 1 : spans_[in_span[i]].end;
    if (in_span[i] != kNone) continue;
    for (std::size_t j = i + 1; j <= n_ && j - i <= kMaxPhraseLength; ++j) {
      if (in_span[j - 1] != kNone) break;
      const auto* entries = table.find(tokens.subspan(i, j - i));
      if (!entries) continue;
      for (const auto& e : *entries) {
        Option o{i, j, &e.target, {}, std::log10(e.p_target_given_source), std::log10(e.p_source_given_target),
                 Origin::kTable};
        for (const auto& t : e.target) o.lm_ids.push_back(lm_.id(t));
        add_option(std::move(o));
      }
    }
    if (!table.find(tokens.subspan(i, 1))) {
      copies_.push_back({tokens[i]});
      Option o{i, i + 1, &copies_.back(), {lm_.id(unicode::to_lower(tokens[i]))}, 0.0, 0.0, Origin::kUnknown};
      add_option(std::move(o));
    }
  }
  compute_future_costs();
}

void SearchSpace::add_option(Option option) {
  by_start_[option.start].push_back(options_.size());
  options_.push_back(std::move(option));
}

double SearchSpace::combine(const FeatureVector& f, double unknown) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < kFeatureCount; ++i) sum += engine_.config.weights[i] * f[i];
  return sum + unknown;
}

void SearchSpace::compute_future_costs() {
  const auto& w = engine_.config.weights;
  future_.assign(n_ + 1, std::vector<double>(n_ + 1, kNegInf));
  std::vector<WordId> ctx;
  for (const auto& o : options_) {
    double lm = 0.0;
    ctx.clear();
    for (WordId id : o.lm_ids) {
      lm += lm_.log_prob(ctx, id);
      ctx.push_back(id);
    }
    double est = w[0] * o.log_tgs + w[1] * o.log_sgt + w[2] * lm -
                 w[3] * static_cast<double>(o.target->size());
    if (o.origin == Origin::kUnknown) est += engine_.config.unknown_penalty;
    future_[o.start][o.end] = std::max(future_[o.start][o.end], est);
  }
  for (std::size_t len = 2; len <= n_; ++len) {
    for (std::size_t i = 0; i + len <= n_; ++i) {
      const std::size_t j = i + len;
      for (std::size_t k = i + 1; k < j; ++k)
        future_[i][j] = std::max(future_[i][j], future_[i][k] + future_[k][j]);
    }
  }
}

double SearchSpace::future_cost(const Coverage& coverage) const {
  double total = 0.0;
  std::size_t i = 0;
  while (i < n_) {
    if (coverage.test(i)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n_ && !coverage.test(j)) ++j;
    total += future_[i][j];
    i = j;
  }
  return total;
}

State SearchSpace::initial() const {
  State s;
  s.coverage = Coverage(n_);
  s.context.fill(langmodel::kBos);
  return s;
}

bool SearchSpace::fillable(const Coverage& coverage, std::size_t pos) const {
  const std::size_t d = engine_.config.distortion_limit;
  std::size_t u = 0;
  while (u < n_ && coverage.test(u)) ++u;
  while (u < n_) {
    if (distance(u, pos) > d) return false;
    pos = unit_end_[u];
    u = pos;
    while (u < n_ && coverage.test(u)) ++u;
  }
  return true;
}

bool SearchSpace::allowed(const State& state, const Option& option) const {
  if (distance(option.start, state.last_end) > engine_.config.distortion_limit) return false;
  if (state.coverage.any_in(option.start, option.end)) return false;
  Coverage next = state.coverage;
  next.set_range(option.start, option.end);
  return fillable(next, option.end);
}

State SearchSpace::apply(const State& state, const Option& option) const {
  State s = state;
  s.coverage.set_range(option.start, option.end);
  s.covered += option.end - option.start;

  double lm = 0.0;
  for (WordId id : option.lm_ids) {
    lm += lm_.log_prob(std::span<const WordId>(s.context.data(), context_size_), id);
    if (context_size_ > 0) {
      std::copy(s.context.begin() + 1, s.context.begin() + static_cast<std::ptrdiff_t>(context_size_),
                s.context.begin());
      s.context[context_size_ - 1] = id;
    }
  }
  s.features[0] += option.log_tgs;
  s.features[1] += option.log_sgt;
  s.features[2] += lm;
  s.features[3] -= static_cast<double>(option.target->size());
  s.features[4] -= static_cast<double>(distance(option.start, state.last_end));
  if (option.origin == Origin::kUnknown) s.unknown += engine_.config.unknown_penalty;
  s.last_end = option.end;
  s.target_length += option.target->size();
  if (s.covered == n_)
    s.features[2] += lm_.log_prob(std::span<const WordId>(s.context.data(), context_size_), langmodel::kEos);
  s.score = combine(s.features, s.unknown);
  return s;
}

TranslationResult SearchSpace::result(const std::vector<const Option*>& steps, const State& final_state) const {
  TranslationResult r;
  for (const Option* o : steps) {
    r.derivation.push_back({o->start, o->end, *o->target, o->origin});
    r.target.insert(r.target.end(), o->target->begin(), o->target->end());
    if (o->origin == Origin::kUnknown) r.unknown_words.push_back(o->target->front());
  }
  r.breakdown = {final_state.features, final_state.unknown};
  r.score = final_state.score;
  return r;
}

bool better_final(double score_a, const std::vector<std::string>& target_a, double score_b,
                  const std::vector<std::string>& target_b) {
  if (score_a != score_b) return score_a > score_b;
  if (target_a.size() != target_b.size()) return target_a.size() < target_b.size();
  return target_a < target_b;
}

}  // namespace onts::decoder::detail
