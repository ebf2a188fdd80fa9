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

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace onts::decoder {

inline constexpr std::size_t kMaxPhraseLength = 7;
inline constexpr std::size_t kDefaultMaxOptions = 20;

struct PhraseOption {
  std::vector<std::string> target;
  double p_target_given_source = 1.0;
  double p_source_given_target = 1.0;

  bool operator==(const PhraseOption&) const = default;
};

// Source phrase -> translation options, each list sorted by p(t|s)
// descending (then p(s|t) descending, then target) and capped at K entries.
class PhraseTable {
 public:
  explicit PhraseTable(std::size_t max_options = kDefaultMaxOptions);

  // Lines "src ||| tgt ||| p(t|s) p(s|t)". Throws onts::ParseError with the
  // line number on malformed lines or probabilities outside (0, 1].
  static PhraseTable read(std::istream& in, std::size_t max_options = kDefaultMaxOptions);
  static PhraseTable load(const std::string& path, std::size_t max_options = kDefaultMaxOptions);
  void write(std::ostream& out) const;

  void add(std::span<const std::string> source, PhraseOption option);

  // nullptr when the source phrase has no entry.
  const std::vector<PhraseOption>* find(std::span<const std::string> source) const;

  std::size_t size() const { return entries_.size(); }
  std::size_t option_count() const;
  std::size_t max_options() const { return max_options_; }

 private:
  std::size_t max_options_;
  std::unordered_map<std::string, std::vector<PhraseOption>> entries_;
};

// Naive co-occurrence estimate over sentence-aligned text: every source word
// is paired with every target word of the aligned sentence;
// p(t|s) = c(s,t) / c(s), p(s|t) = c(s,t) / c(t). Single-word phrases only.
PhraseTable train_cooccurrence(const std::vector<std::vector<std::string>>& source,
                               const std::vector<std::vector<std::string>>& target,
                               std::size_t max_options = kDefaultMaxOptions);

}  // namespace onts::decoder
