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

#include <charconv>
#include <fstream>
#include <map>

#include "onts/common/error.hpp"
#include "onts/common/strings.hpp"
#include "onts/langmodel/model.hpp"

namespace onts::langmodel {

namespace {

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

double parse_double(std::string_view s, std::size_t line) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size())
    throw ParseError("bad number '" + std::string(s) + "'", line, 1);
  return v;
}

}  // namespace

void LanguageModel::write_arpa(std::ostream& out) const {
  out << "\\data\\\n";
  for (int k = 1; k <= order_; ++k) out << "ngram " << k << "=" << ngram_count(k) << "\n";
  for (int k = 1; k <= order_; ++k) {
    out << "\n\\" << k << "-grams:\n";
    std::map<std::string, const Entry*> sorted;
    for (const auto& [key, entry] : tables_[static_cast<std::size_t>(k) - 1]) {
      std::string words;
      for (std::uint8_t i = 0; i < key.size; ++i) {
        if (i) words += ' ';
        words += vocab_.word(key.ids[i]);
      }
      sorted.emplace(std::move(words), &entry);
    }
    for (const auto& [words, entry] : sorted) {
      out << format_double(entry->log_prob) << '\t' << words;
      if (k < order_ && entry->log_backoff != 0.0) out << '\t' << format_double(entry->log_backoff);
      out << '\n';
    }
  }
  out << "\n\\end\\\n";
}

LanguageModel LanguageModel::read_arpa(std::istream& in) {
  LanguageModel lm;
  std::vector<std::size_t> declared;
  std::string raw;
  std::size_t lineno = 0;
  enum class State { kStart, kHeader, kBody, kEnd } state = State::kStart;
  int current = 0;

  while (std::getline(in, raw)) {
    ++lineno;
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (state == State::kEnd) throw ParseError("content after \\end\\", lineno, 1);
    if (line == "\\data\\") {
      if (state != State::kStart) throw ParseError("duplicate \\data\\", lineno, 1);
      state = State::kHeader;
      continue;
    }
    if (state == State::kStart) throw ParseError("expected \\data\\", lineno, 1);
    if (line == "\\end\\") {
      state = State::kEnd;
      continue;
    }
    if (line.front() == '\\') {
      // "\N-grams:"
      const auto dash = line.find("-grams:");
      if (dash == std::string_view::npos) throw ParseError("bad section header", lineno, 1);
      current = static_cast<int>(parse_double(line.substr(1, dash - 1), lineno));
      if (current < 1 || current > static_cast<int>(declared.size()))
        throw ParseError("section for undeclared order", lineno, 1);
      if (lm.tables_.empty()) lm.tables_.resize(declared.size());
      state = State::kBody;
      continue;
    }
    if (state == State::kHeader) {
      if (!line.starts_with("ngram ")) throw ParseError("expected 'ngram N=count'", lineno, 1);
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected 'ngram N=count'", lineno, 1);
      const auto k = static_cast<std::size_t>(parse_double(trim(line.substr(6, eq - 6)), lineno));
      if (k != declared.size() + 1) throw ParseError("n-gram orders must be declared in sequence", lineno, 1);
      if (k > static_cast<std::size_t>(kMaxOrder)) throw ParseError("unsupported model order", lineno, 1);
      declared.push_back(static_cast<std::size_t>(parse_double(trim(line.substr(eq + 1)), lineno)));
      continue;
    }
    const auto fields = split(line, "\t");
    if (fields.size() < 2 || fields.size() > 3) throw ParseError("expected logprob<TAB>ngram[<TAB>backoff]", lineno, 1);
    const auto words = split_whitespace(fields[1]);
    if (static_cast<int>(words.size()) != current)
      throw ParseError("n-gram length does not match section", lineno, fields[0].size() + 2);
    NgramKey key;
    key.size = static_cast<std::uint8_t>(current);
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (current == 1) {
        key.ids[i] = lm.vocab_.add(words[i]);
      } else {
        const WordId id = lm.vocab_.id(words[i]);
        if (id == kUnk && words[i] != kUnkToken)
          throw ParseError("word '" + words[i] + "' missing from unigrams", lineno, 1);
        key.ids[i] = id;
      }
    }
    Entry& e = lm.tables_[static_cast<std::size_t>(current) - 1][key];
    e.log_prob = parse_double(fields[0], lineno);
    if (fields.size() == 3) e.log_backoff = parse_double(fields[2], lineno);
  }
  if (state != State::kEnd) throw ParseError("missing \\end\\", lineno, 1);
  lm.order_ = static_cast<int>(declared.size());
  if (lm.order_ < 1 || lm.order_ > kMaxOrder) throw ParseError("unsupported model order", lineno, 1);
  if (lm.tables_.empty()) throw ParseError("model has no n-grams", lineno, 1);
  for (std::size_t k = 0; k < declared.size(); ++k) {
    if (lm.tables_[k].size() != declared[k])
      throw ParseError("order " + std::to_string(k + 1) + " declares " + std::to_string(declared[k]) +
                           " n-grams but lists " + std::to_string(lm.tables_[k].size()),
                       lineno, 1);
  }
  return lm;
}

LanguageModel LanguageModel::load_arpa(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open language model " + path);
  return read_arpa(in);
}

}  // namespace onts::langmodel
