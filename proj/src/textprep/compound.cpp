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

#include "onts/textprep/compound.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "onts/common/error.hpp"
#include "onts/common/strings.hpp"
#include "onts/common/unicode.hpp"

namespace onts::textprep {

void FrequencyTable::add(std::string_view token, std::uint64_t count) {
  if (count == 0) return;
  counts_[std::string(token)] += count;
  total_ += count;
}

void FrequencyTable::add_corpus(std::span<const std::vector<std::string>> sentences) {
  for (const auto& sentence : sentences)
    for (const auto& tok : sentence) add(tok);
}

std::uint64_t FrequencyTable::count(std::string_view token) const {
  const auto it = counts_.find(std::string(token));
  return it == counts_.end() ? 0 : it->second;
}

void FrequencyTable::save(std::ostream& out) const {
  std::map<std::string_view, std::uint64_t> sorted(counts_.begin(), counts_.end());
  for (const auto& [tok, n] : sorted) out << tok << '\t' << n << '\n';
}

FrequencyTable FrequencyTable::load(std::istream& in) {
  FrequencyTable table;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto fields = split(line, "\t");
    if (fields.size() < 2) throw ParseError("expected token<TAB>count", lineno, 1);
    std::uint64_t n = 0;
    try {
      n = std::stoull(fields[1]);
    } catch (const std::exception&) {
      throw ParseError("bad count '" + fields[1] + "'", lineno, fields[0].size() + 2);
    }
    if (n == 0) throw ParseError("count must be >= 1", lineno, fields[0].size() + 2);
    table.add(fields[0], n);
  }
  return table;
}

namespace {

struct Split {
  double log_sum = -std::numeric_limits<double>::infinity();
  std::vector<std::string> parts;
};

}  // namespace

std::vector<std::string> split_compound(std::string_view token, const FrequencyTable& freqs,
                                        const CompoundOptions& options) {
  std::vector<std::string> whole{std::string(token)};
  if (!unicode::is_alphabetic(token)) return whole;
  const auto offsets = unicode::char_offsets(token);
  const std::size_t n = offsets.size() - 1;
  const std::size_t min_len = std::max<std::size_t>(options.min_part_chars, 1);
  if (n < 2 * min_len || n > options.max_token_chars) return whole;

  auto piece = [&](std::size_t from, std::size_t to) {
    return token.substr(offsets[from], offsets[to] - offsets[from]);
  };

  // best[start][k]: best decomposition of the suffix starting at char `start`
  // into exactly k parts. Ties keep the first candidate found (shorter first
  // part, no filler before fillers in listed order).
  const std::size_t max_parts = n / min_len;
  std::vector<std::vector<Split>> best(n + 1, std::vector<Split>(max_parts + 1));
  for (std::size_t start = n; start-- > 0;) {
    for (std::size_t end = start + min_len; end <= n; ++end) {
      const std::uint64_t c = freqs.count(piece(start, end));
      if (c == 0) continue;
      const double lc = std::log(static_cast<double>(c));
      if (end == n) {
        if (lc > best[start][1].log_sum) best[start][1] = Split{lc, {std::string(piece(start, end))}};
        continue;
      }
      std::vector<std::size_t> next_starts{end};
      for (const auto& filler : options.fillers) {
        const std::size_t flen = unicode::char_count(filler);
        if (end + flen < n && piece(end, end + flen) == filler) next_starts.push_back(end + flen);
      }
      for (const std::size_t next : next_starts) {
        for (std::size_t k = 2; k <= max_parts; ++k) {
          const Split& rest = best[next][k - 1];
          if (rest.parts.empty()) continue;
          const double total = lc + rest.log_sum;
          if (total > best[start][k].log_sum) {
            Split s{total, {std::string(piece(start, end))}};
            s.parts.insert(s.parts.end(), rest.parts.begin(), rest.parts.end());
            best[start][k] = std::move(s);
          }
        }
      }
    }
  }

  const std::uint64_t whole_count = freqs.count(token);
  const double whole_log = std::log(whole_count > 0 ? static_cast<double>(whole_count) : 0.5);
  const Split* winner = nullptr;
  double winner_mean = whole_log;
  for (std::size_t k = 2; k <= max_parts; ++k) {
    const Split& s = best[0][k];
    if (s.parts.empty()) continue;
    const double mean = s.log_sum / static_cast<double>(k);
    if (mean > winner_mean) {
      winner_mean = mean;
      winner = &s;
    }
  }
  return winner ? winner->parts : whole;
}

}  // namespace onts::textprep
