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

#include "onts/textprep/recaser.hpp"

#include <map>

#include "onts/common/error.hpp"
#include "onts/common/strings.hpp"
#include "onts/common/unicode.hpp"

namespace onts::textprep {

namespace {

using FormCounts = std::map<std::string, std::uint64_t>;

SurfaceForm pick(const FormCounts& counts) {
  SurfaceForm best;
  for (const auto& [form, n] : counts) {
    // std::map iterates in lexicographic order, so '>' keeps the smallest on ties.
    if (n > best.count) best = SurfaceForm{form, n};
  }
  return best;
}

bool has_alnum(std::string_view tok) {
  if (unicode::has_alpha(tok)) return true;
  for (char c : tok)
    if (c >= '0' && c <= '9') return true;
  return false;
}

}  // namespace

std::size_t sentence_initial_index(std::span<const std::string> tokens) {
  for (std::size_t i = 0; i < tokens.size(); ++i)
    if (has_alnum(tokens[i])) return i;
  return tokens.size();
}

RecaseModel RecaseModel::train(std::span<const std::vector<std::string>> cased_sentences) {
  std::unordered_map<std::string, FormCounts> inner;
  std::unordered_map<std::string, FormCounts> initial;
  for (const auto& sentence : cased_sentences) {
    const std::size_t first = sentence_initial_index(sentence);
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      const auto& tok = sentence[i];
      if (!unicode::has_alpha(tok)) continue;
      auto& table = i == first ? initial : inner;
      ++table[unicode::to_lower(tok)][tok];
    }
  }
  RecaseModel model;
  for (const auto& [key, counts] : inner) model.forms_[key] = pick(counts);
  for (const auto& [key, counts] : initial)
    if (!model.forms_.count(key)) model.forms_[key] = pick(counts);
  return model;
}

std::optional<SurfaceForm> RecaseModel::lookup(std::string_view lowered) const {
  const auto it = forms_.find(std::string(lowered));
  if (it == forms_.end()) return std::nullopt;
  return it->second;
}

void RecaseModel::set(std::string key, SurfaceForm form) {
  if (unicode::to_lower(form.form) != key)
    throw Error("surface form '" + form.form + "' does not lowercase to '" + key + "'");
  forms_[std::move(key)] = std::move(form);
}

void RecaseModel::save(std::ostream& out) const {
  std::map<std::string_view, const SurfaceForm*> sorted;
  for (const auto& [key, form] : forms_) sorted[key] = &form;
  for (const auto& [key, form] : sorted) out << key << '\t' << form->count << '\t' << form->form << '\n';
}

RecaseModel RecaseModel::load(std::istream& in) {
  RecaseModel model;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto fields = split(line, "\t");
    if (fields.size() != 3) throw ParseError("expected key<TAB>count<TAB>surface", lineno, 1);
    std::uint64_t n = 0;
    try {
      n = std::stoull(fields[1]);
    } catch (const std::exception&) {
      throw ParseError("bad count '" + fields[1] + "'", lineno, fields[0].size() + 2);
    }
    try {
      model.set(fields[0], SurfaceForm{fields[2], n});
    } catch (const Error& e) {
      throw ParseError(e.what(), lineno, 1);
    }
  }
  return model;
}

std::vector<std::string> recase(std::span<const std::string> tokens, const RecaseModel& model,
                                std::span<const bool> keep) {
  std::vector<std::string> out(tokens.begin(), tokens.end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < keep.size() && keep[i]) continue;
    if (auto form = model.lookup(unicode::to_lower(out[i]))) out[i] = form->form;
  }
  const std::size_t first = sentence_initial_index(out);
  const bool kept = first < keep.size() && keep[first];
  if (first < out.size() && !kept && unicode::has_alpha(unicode::encode(unicode::first_char(out[first])))) {
    out[first] = unicode::capitalize(out[first]);
  }
  return out;
}

}  // namespace onts::textprep
