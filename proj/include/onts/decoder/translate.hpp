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

#include <span>
#include <string>
#include <vector>

#include "onts/common/constrained_span.hpp"
#include "onts/decoder/engine.hpp"

namespace onts::decoder {

enum class Origin { kTable, kForced, kUnknown };

std::string_view to_string(Origin o);

struct DerivationStep {
  std::size_t start = 0;
  std::size_t end = 0;  // exclusive
  std::vector<std::string> target;
  Origin origin = Origin::kTable;

  bool operator==(const DerivationStep&) const = default;
};

// Unweighted feature totals plus the unknown-word penalty, which is added to
// the score as is (weight 1).
struct ScoreBreakdown {
  FeatureVector features{};
  double unknown_penalty = 0.0;

  double dot(const FeatureVector& weights) const;
  bool operator==(const ScoreBreakdown&) const = default;
};

struct TranslationResult {
  std::vector<std::string> target;
  std::vector<DerivationStep> derivation;  // in target order
  ScoreBreakdown breakdown;
  double score = 0.0;
  std::vector<std::string> unknown_words;
  double wall_ms = 0.0;
  std::size_t hypotheses = 0;  // created during search
};

// Stack-based beam search. Options: phrase-table entries over uncovered
// spans that do not touch a constrained span; each constrained span as one
// atomic option producing its forced target; a verbatim copy for a single
// token that has no single-token table entry and is not constrained. A phrase
// may start at most d positions away from the end of the previous one, and
// only if the remaining gaps can still be filled left to right under the same
// limit. Throws onts::Error for overlapping or out-of-range spans.
TranslationResult translate(std::span<const std::string> tokens, std::span<const ConstrainedSpan> spans,
                            const TranslationEngine& engine);

// Enumerates every derivation allowed by the same constraints and returns the
// best one; tie-breaks as in translate (higher score, fewer target tokens,
// lexicographically smaller target). Throws onts::Error when the sentence
// exceeds `max_tokens` or the search exceeds `max_nodes` partial derivations.
TranslationResult decode_exhaustive(std::span<const std::string> tokens,
                                    std::span<const ConstrainedSpan> spans, const TranslationEngine& engine,
                                    std::size_t max_tokens = 8, std::size_t max_nodes = 50'000'000);

}  // namespace onts::decoder
