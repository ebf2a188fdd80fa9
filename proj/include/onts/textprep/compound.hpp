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

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace onts::textprep {

// Token occurrence counts over a monolingual corpus.
class FrequencyTable {
 public:
  void add(std::string_view token, std::uint64_t count = 1);
  void add_corpus(std::span<const std::vector<std::string>> sentences);

  std::uint64_t count(std::string_view token) const;
  std::uint64_t total() const { return total_; }
  std::size_t size() const { return counts_.size(); }

  // "token<TAB>count" per line, sorted by token.
  void save(std::ostream& out) const;
  static FrequencyTable load(std::istream& in);

 private:
  std::unordered_map<std::string, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

struct CompoundOptions {
  std::size_t min_part_chars = 3;
  std::vector<std::string> fillers = {"s", "es"};
  std::size_t max_token_chars = 128;
};

// Frequency-based decomposition: picks the split whose parts have the
// highest geometric-mean corpus frequency, and keeps the token whole unless
// that mean strictly beats the whole word's own count (0.5 when unseen).
// Fillers between parts are dropped from the result.
std::vector<std::string> split_compound(std::string_view token, const FrequencyTable& freqs,
                                        const CompoundOptions& options = {});

}  // namespace onts::textprep
