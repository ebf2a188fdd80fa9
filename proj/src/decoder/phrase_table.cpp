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

#include "onts/decoder/phrase_table.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>

#include "onts/common/error.hpp"
#include "onts/common/strings.hpp"

namespace onts::decoder {

namespace {

std::string key_of(std::span<const std::string> tokens) { return join(tokens, " "); }

bool option_before(const PhraseOption& a, const PhraseOption& b) {
  if (a.p_target_given_source != b.p_target_given_source)
    return a.p_target_given_source > b.p_target_given_source;
  if (a.p_source_given_target != b.p_source_given_target)
    return a.p_source_given_target > b.p_source_given_target;
  return a.target < b.target;
}

double parse_probability(std::string_view field, std::size_t line, std::size_t column) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || end != field.data() + field.size())
    throw ParseError("bad probability '" + std::string(field) + "'", line, column);
  if (!(v > 0.0 && v <= 1.0))
    throw ParseError("probability " + std::string(field) + " outside (0, 1]", line, column);
  return v;
}

}  // namespace

PhraseTable::PhraseTable(std::size_t max_options) : max_options_(max_options) {
  if (max_options_ == 0) throw Error("phrase table must keep at least one option per phrase");
}

void PhraseTable::add(std::span<const std::string> source, PhraseOption option) {
  if (source.empty() || source.size() > kMaxPhraseLength)
    throw Error("source phrase must have 1.." + std::to_string(kMaxPhraseLength) + " tokens");
  if (option.target.empty()) throw Error("empty target phrase for '" + key_of(source) + "'");
  auto& list = entries_[key_of(source)];
  list.insert(std::upper_bound(list.begin(), list.end(), option, option_before), std::move(option));
  if (list.size() > max_options_) list.pop_back();
}

const std::vector<PhraseOption>* PhraseTable::find(std::span<const std::string> source) const {
  const auto it = entries_.find(key_of(source));
  return it == entries_.end() ? nullptr : &it->second;
}

std::size_t PhraseTable::option_count() const {
  std::size_t n = 0;
  for (const auto& [k, list] : entries_) n += list.size();
  return n;
}

PhraseTable PhraseTable::read(std::istream& in, std::size_t max_options) {
  PhraseTable table(max_options);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || trim(line).front() == '#') continue;
    const auto fields = split(line, "|||");
    if (fields.size() != 3) throw ParseError("expected 'src ||| tgt ||| p(t|s) p(s|t)'", lineno, 1);
    auto source = split_whitespace(fields[0]);
    auto target = split_whitespace(fields[1]);
    const auto scores = split_whitespace(fields[2]);
    const std::size_t score_column = fields[0].size() + fields[1].size() + 7;
    if (source.empty() || source.size() > kMaxPhraseLength)
      throw ParseError("source phrase must have 1.." + std::to_string(kMaxPhraseLength) + " tokens", lineno, 1);
    if (target.empty()) throw ParseError("empty target phrase", lineno, fields[0].size() + 4);
    if (scores.size() != 2) throw ParseError("expected two probabilities", lineno, score_column);
    PhraseOption option{std::move(target), parse_probability(scores[0], lineno, score_column),
                        parse_probability(scores[1], lineno, score_column)};
    table.add(source, std::move(option));
  }
  return table;
}

PhraseTable PhraseTable::load(const std::string& path, std::size_t max_options) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open phrase table " + path);
  try {
    return read(in, max_options);
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + std::to_string(e.line()) + ": " + e.what(), e.line(), e.column());
  }
}

void PhraseTable::write(std::ostream& out) const {
  std::map<std::string, const std::vector<PhraseOption>*> sorted;
  for (const auto& [k, list] : entries_) sorted.emplace(k, &list);
  char buf[64];
  for (const auto& [k, list] : sorted) {
    for (const auto& o : *list) {
      out << k << " ||| " << join(o.target, " ") << " ||| ";
      out << std::string_view(buf, std::to_chars(buf, buf + sizeof buf, o.p_target_given_source).ptr) << ' ';
      out << std::string_view(buf, std::to_chars(buf, buf + sizeof buf, o.p_source_given_target).ptr) << '\n';
    }
  }
}

PhraseTable train_cooccurrence(const std::vector<std::vector<std::string>>& source,
                               const std::vector<std::vector<std::string>>& target,
                               std::size_t max_options) {
  if (source.size() != target.size())
    throw Error("parallel corpus sides differ in length: " + std::to_string(source.size()) + " vs " +
                std::to_string(target.size()));
  std::map<std::pair<std::string, std::string>, double> joint;
  std::map<std::string, double> src_total;
  std::map<std::string, double> tgt_total;
  for (std::size_t i = 0; i < source.size(); ++i) {
    for (const auto& s : source[i]) {
      for (const auto& t : target[i]) {
        joint[{s, t}] += 1.0;
        src_total[s] += 1.0;
        tgt_total[t] += 1.0;
      }
    }
  }
  PhraseTable table(max_options);
  for (const auto& [pair, c] : joint) {
    const std::string s[] = {pair.first};
    table.add(s, PhraseOption{{pair.second}, c / src_total[pair.first], c / tgt_total[pair.second]});
  }
  return table;
}

}  // namespace onts::decoder
