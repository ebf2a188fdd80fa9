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
#include <vector>

namespace onts::evalkit {

using TokenizedCorpus = std::vector<std::vector<std::string>>;

inline constexpr std::size_t kBleuOrder = 4;

struct BleuReport {
  double bleu = 0.0;
  std::array<double, kBleuOrder> precisions{};
  std::array<std::size_t, kBleuOrder> matches{};  // clipped
  std::array<std::size_t, kBleuOrder> totals{};
  double brevity_penalty = 0.0;
  std::size_t hypothesis_length = 0;
  std::size_t reference_length = 0;
};

// Corpus-level single-reference BLEU with clipped n-gram precisions up to 4,
// no smoothing: bleu = BP * exp(mean ln p_n), 0 when any p_n is 0, and
// BP = min(1, exp(1 - ref/hyp)). Tokens are compared exactly; callers
// lowercase beforehand. Throws onts::Error on count mismatch or an empty
// corpus.
BleuReport bleu(const TokenizedCorpus& hypotheses, const TokenizedCorpus& references);

}  // namespace onts::evalkit
