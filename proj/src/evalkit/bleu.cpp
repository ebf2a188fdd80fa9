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

#include "onts/evalkit/bleu.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <span>

#include "onts/common/error.hpp"

namespace onts::evalkit {

namespace {

using Ngram = std::span<const std::string>;

struct NgramLess {
  bool operator()(Ngram a, Ngram b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

std::map<Ngram, std::size_t, NgramLess> count_ngrams(const std::vector<std::string>& tokens, std::size_t n) {
  std::map<Ngram, std::size_t, NgramLess> counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) ++counts[Ngram(tokens).subspan(i, n)];
  return counts;
}

}  // namespace

BleuReport bleu(const TokenizedCorpus& hypotheses, const TokenizedCorpus& references) {
  if (hypotheses.size() != references.size())
    throw Error("BLEU needs one reference per hypothesis: " + std::to_string(hypotheses.size()) +
                " hypotheses, " + std::to_string(references.size()) + " references");
  if (hypotheses.empty()) throw Error("BLEU of an empty corpus");

  BleuReport r;
  for (std::size_t s = 0; s < hypotheses.size(); ++s) {
    const auto& hyp = hypotheses[s];
    const auto& ref = references[s];
    r.hypothesis_length += hyp.size();
    r.reference_length += ref.size();
    for (std::size_t n = 1; n <= kBleuOrder; ++n) {
      const auto hyp_counts = count_ngrams(hyp, n);
      const auto ref_counts = count_ngrams(ref, n);
      for (const auto& [gram, c] : hyp_counts) {
        const auto it = ref_counts.find(gram);
        if (it != ref_counts.end()) r.matches[n - 1] += std::min(c, it->second);
      }
      if (hyp.size() >= n) r.totals[n - 1] += hyp.size() - n + 1;
    }
  }

  double log_sum = 0.0;
  bool any_zero = false;
  for (std::size_t n = 0; n < kBleuOrder; ++n) {
    r.precisions[n] = r.totals[n] == 0 ? 0.0 : static_cast<double>(r.matches[n]) / static_cast<double>(r.totals[n]);
    if (r.matches[n] == 0) {
      any_zero = true;
    } else {
      log_sum += std::log(r.precisions[n]);
    }
  }
  if (r.hypothesis_length == 0) {
    r.brevity_penalty = 0.0;
  } else if (r.hypothesis_length >= r.reference_length) {
    r.brevity_penalty = 1.0;
  } else {
    r.brevity_penalty = std::exp(1.0 - static_cast<double>(r.reference_length) / static_cast<double>(r.hypothesis_length));
  }
  r.bleu = any_zero ? 0.0 : r.brevity_penalty * std::exp(log_sum / static_cast<double>(kBleuOrder));
  return r;
}

}  // namespace onts::evalkit
