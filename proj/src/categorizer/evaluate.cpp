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

#include <algorithm>
#include <filesystem>

#include "onts/categorizer/category.hpp"
#include "onts/common/error.hpp"
#include "onts/common/strings.hpp"
#include "onts/common/unicode.hpp"
#include "onts/textprep/tokenizer.hpp"

namespace onts::categorizer {

namespace {

bool token_matches(const std::string& def_token, bool prefix, bool case_sensitive,
                   const std::string& cased, const std::string& lowered) {
  const std::string& target = case_sensitive ? cased : lowered;
  if (prefix) return target.compare(0, def_token.size(), def_token) == 0;
  return target == def_token;
}

struct PreparedPattern {
  const Pattern& p;
  std::vector<bool> case_sensitive;

  explicit PreparedPattern(const Pattern& pattern) : p(pattern) {
    for (const auto& tok : p.tokens) case_sensitive.push_back(unicode::has_upper(tok));
  }
};

std::vector<std::size_t> find_all(const Pattern& p, std::span<const std::string> cased,
                                  std::span<const std::string> lowered) {
  std::vector<std::size_t> hits;
  const std::size_t len = p.tokens.size();
  if (len == 0 || cased.size() < len) return hits;
  const PreparedPattern prepared(p);
  for (std::size_t start = 0; start + len <= cased.size(); ++start) {
    bool ok = true;
    for (std::size_t k = 0; k < len && ok; ++k) {
      const bool prefix = p.wildcard && k + 1 == len;
      ok = token_matches(p.tokens[k], prefix, prepared.case_sensitive[k], cased[start + k],
                         lowered[start + k]);
    }
    if (ok) hits.push_back(start);
  }
  return hits;
}

bool within(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b, int n) {
  // Both sorted ascending: two-pointer sweep for the closest pair.
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const std::size_t d = a[i] > b[j] ? a[i] - b[j] : b[j] - a[i];
    if (d <= static_cast<std::size_t>(n)) return true;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

bool eval_expr(const Expr& e, const Document& doc) {
  switch (e.kind) {
    case Expr::Kind::kLeaf:
      return !match_pattern(e.pattern, doc).empty();
    case Expr::Kind::kNot:
      return !eval_expr(e.children.front(), doc);
    case Expr::Kind::kAnd:
      return std::all_of(e.children.begin(), e.children.end(),
                         [&](const Expr& c) { return eval_expr(c, doc); });
    case Expr::Kind::kOr:
      return std::any_of(e.children.begin(), e.children.end(),
                         [&](const Expr& c) { return eval_expr(c, doc); });
    case Expr::Kind::kNear:
      return within(match_pattern(e.children[0].pattern, doc),
                    match_pattern(e.children[1].pattern, doc), e.distance);
  }
  return false;
}

}  // namespace

Document::Document(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  lowered_.reserve(tokens_.size());
  for (const auto& t : tokens_) lowered_.push_back(unicode::to_lower(t));
}

std::vector<std::size_t> match_pattern(const Pattern& p, const Document& doc) {
  return find_all(p, doc.tokens(), doc.lowered());
}

std::vector<std::size_t> match_pattern(const Pattern& p, std::span<const std::string> tokens) {
  return match_pattern(p, Document(std::vector<std::string>(tokens.begin(), tokens.end())));
}

Evaluation evaluate(const CategoryDef& def, const Document& doc) {
  if (def.kind == CategoryDef::Kind::kBoolean) {
    if (!def.rule) throw Error("boolean category '" + def.id + "' has no rule");
    return {eval_expr(*def.rule, doc), std::nullopt};
  }
  std::int64_t score = 0;
  for (const auto& wp : def.patterns)
    score += wp.weight * static_cast<std::int64_t>(match_pattern(wp.pattern, doc).size());
  return {score >= def.threshold, score};
}

Evaluation evaluate(const CategoryDef& def, std::span<const std::string> tokens) {
  return evaluate(def, Document(std::vector<std::string>(tokens.begin(), tokens.end())));
}

std::vector<std::string> categorize(std::string_view lang, const Document& doc,
                                    std::span<const CategoryDef> defs) {
  std::vector<std::string> ids;
  for (const auto& def : defs) {
    if (def.lang != "*" && def.lang != lang) continue;
    if (evaluate(def, doc).matched) ids.push_back(def.id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::vector<std::string> categorize(NewsItem& item, std::span<const CategoryDef> defs,
                                    const textprep::Tokenizer& tokenizer) {
  std::vector<std::string> tokens = tokenizer.tokenize(item.title).tokens;
  for (const auto& sentence : tokenizer.split_sentences(item.body)) {
    auto ts = tokenizer.tokenize(sentence);
    tokens.insert(tokens.end(), ts.tokens.begin(), ts.tokens.end());
  }
  item.categories = categorize(item.source_lang, Document(std::move(tokens)), defs);
  return item.categories;
}

std::vector<CategoryDef> load_definitions(const std::string& root) {
  namespace fs = std::filesystem;
  std::vector<CategoryDef> defs;
  if (!fs::is_directory(root)) throw Error("category directory not found: " + root);
  std::vector<fs::path> files;
  for (const auto& lang_dir : fs::directory_iterator(root)) {
    if (!lang_dir.is_directory()) continue;
    for (const auto& f : fs::directory_iterator(lang_dir.path()))
      if (f.is_regular_file()) files.push_back(f.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    std::string lang = path.parent_path().filename().string();
    if (lang == "_all") lang = "*";
    try {
      defs.push_back(parse_definition(read_file(path.string()), path.stem().string(), lang));
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ": " + e.what(), e.line(), e.column());
    }
  }
  return defs;
}

}  // namespace onts::categorizer
