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

// Direct Witten-Bell interpolation from raw counts, written independently of
// the library's backoff-form tables.

#include <map>
#include <set>
#include <string>
#include <vector>

namespace onts::testing {

class WittenBellOracle {
 public:
  WittenBellOracle(const std::vector<std::vector<std::string>>& corpus, int order) : order_(order) {
    for (const auto& s : corpus) {
      std::vector<std::string> padded(static_cast<std::size_t>(order - 1), "<s>");
      padded.insert(padded.end(), s.begin(), s.end());
      padded.push_back("</s>");
      for (std::size_t i = static_cast<std::size_t>(order - 1); i < padded.size(); ++i) {
        vocab_.insert(padded[i]);
        for (int k = 1; k <= order; ++k) {
          std::vector<std::string> h(padded.begin() + static_cast<long>(i) - (k - 1),
                                     padded.begin() + static_cast<long>(i));
          auto& succ = successors_[h];
          succ[padded[i]] += 1;
        }
      }
    }
    vocab_.insert("<unk>");
  }

  // Words that can be predicted: observed words, </s>, <unk>.
  const std::set<std::string>& vocabulary() const { return vocab_; }

  double prob(std::vector<std::string> context, const std::string& word) const {
    if (static_cast<int>(context.size()) > order_ - 1)
      context.erase(context.begin(), context.end() - (order_ - 1));
    const std::string w = vocab_.count(word) ? word : "<unk>";
    return interpolate(context, w);
  }

 private:
  double interpolate(const std::vector<std::string>& h, const std::string& w) const {
    double lower;
    if (h.empty()) {
      lower = 1.0 / static_cast<double>(vocab_.size());
    } else {
      lower = interpolate(std::vector<std::string>(h.begin() + 1, h.end()), w);
    }
    const auto it = successors_.find(h);
    if (it == successors_.end()) return lower;
    double total = 0;
    for (const auto& [word, c] : it->second) total += c;
    const double types = static_cast<double>(it->second.size());
    const auto hit = it->second.find(w);
    const double c = hit == it->second.end() ? 0.0 : hit->second;
    return (c + types * lower) / (total + types);
  }

  int order_;
  std::set<std::string> vocab_;
  std::map<std::vector<std::string>, std::map<std::string, double>> successors_;
};

}  // namespace onts::testing
