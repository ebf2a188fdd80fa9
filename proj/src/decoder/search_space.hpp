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

// Per-sentence state shared by the beam decoder and the exhaustive oracle.

#include <array>
#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <vector>

#include "onts/decoder/translate.hpp"

namespace onts::decoder::detail {

using langmodel::WordId;

inline constexpr std::size_t kMaxContext = langmodel::kMaxOrder - 1;
using Context = std::array<WordId, kMaxContext>;

struct Option {
  std::size_t start = 0;
  std::size_t end = 0;
  const std::vector<std::string>* target = nullptr;
  std::vector<WordId> lm_ids;
  double log_tgs = 0.0;  // log10 p(t|s)
  double log_sgt = 0.0;  // log10 p(s|t)
  Origin origin = Origin::kTable;
};

class Coverage {
 public:
  explicit Coverage(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set_range(std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  bool any_in(std::size_t begin, std::size_t end) const {
    for (std::size_t i = begin; i < end; ++i)
      if (test(i)) return true;
    return false;
  }
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

// Search state after applying a sequence of options.
struct State {
  Coverage coverage;
  std::size_t covered = 0;
  std::size_t last_end = 0;
  Context context{};
  FeatureVector features{};
  double unknown = 0.0;
  double score = 0.0;
  std::size_t target_length = 0;
};

class SearchSpace {
 public:
  SearchSpace(std::span<const std::string> tokens, std::span<const ConstrainedSpan> spans,
              const TranslationEngine& engine);

  std::size_t size() const { return n_; }
  const std::vector<Option>& options() const { return options_; }
  const std::vector<std::size_t>& options_at(std::size_t start) const { return by_start_[start]; }
  const TranslationEngine& engine() const { return engine_; }

  State initial() const;

  // True when `option` may be applied to `state`: its span is uncovered,
  // the jump respects the distortion limit and the rest stays fillable.
  bool allowed(const State& state, const Option& option) const;

  // Applies an allowed option. Feature totals are accumulated in a fixed
  // order so equal derivations produce bit-identical scores in both
  // decoders; completing the sentence adds the end-of-sentence LM term.
  State apply(const State& state, const Option& option) const;

  // Best heuristic score of the uncovered remainder (pruning only).
  double future_cost(const Coverage& coverage) const;

  double combine(const FeatureVector& f, double unknown) const;

  // Assembles the final result from the chosen options (in target order).
  TranslationResult result(const std::vector<const Option*>& steps, const State& final_state) const;

 private:
  bool fillable(const Coverage& coverage, std::size_t pos) const;
  void add_option(Option option);
  void compute_future_costs();

  const TranslationEngine& engine_;
  const langmodel::LanguageModel& lm_;
  std::size_t n_;
  std::size_t context_size_;
  std::vector<ConstrainedSpan> spans_;
  std::deque<std::vector<std::string>> copies_;  // pass-through targets
  std::vector<Option> options_;
  std::vector<std::vector<std::size_t>> by_start_;
  std::vector<std::size_t> unit_end_;  // end of the smallest atomic unit starting at i
  std::vector<std::vector<double>> future_;  // [i][j] best estimate for span i..j
};

// Total order on complete results: higher score, fewer target tokens,
// lexicographically smaller target.
bool better_final(double score_a, const std::vector<std::string>& target_a, double score_b,
                  const std::vector<std::string>& target_b);

}  // namespace onts::decoder::detail
