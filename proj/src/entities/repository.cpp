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

#include "onts/entities/repository.hpp"

#include <algorithm>

#include "onts/common/error.hpp"
#include "onts/common/strings.hpp"
#include "onts/entities/similarity.hpp"

namespace onts::entities {

namespace {

void insert_sorted(std::vector<Variant>& variants, Variant v) {
  const auto it = std::lower_bound(variants.begin(), variants.end(), v);
  if (it == variants.end() || *it != v) variants.insert(it, std::move(v));
}

}  // namespace

EntityRepository EntityRepository::load(std::istream& in) {
  EntityRepository repo;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    const auto f = split(line, "\t");
    if (f.size() != 4) throw ParseError("expected id<TAB>canonical<TAB>lang<TAB>variant", lineno, 1);
    std::uint64_t id = 0;
    try {
      id = std::stoull(f[0]);
    } catch (const std::exception&) {
      throw ParseError("bad id '" + f[0] + "'", lineno, 1);
    }
    auto it = repo.records_.find(id);
    if (it == repo.records_.end()) {
      EntityRecord rec{id, f[1], {{"en", f[1]}}};
      repo.index_variant(id, rec.variants.front());
      it = repo.records_.emplace(id, std::move(rec)).first;
    } else if (it->second.canonical_en != f[1]) {
      throw ParseError("conflicting canonical form for id " + f[0], lineno, 1);
    }
    Variant v{f[2], f[3]};
    const auto before = it->second.variants.size();
    insert_sorted(it->second.variants, v);
    if (it->second.variants.size() != before) repo.index_variant(id, v);
  }
  return repo;
}

void EntityRepository::save(std::ostream& out) const {
  for (const auto& [id, rec] : records_)
    for (const auto& v : rec.variants)
      out << id << '\t' << rec.canonical_en << '\t' << v.lang << '\t' << v.form << '\n';
}

void EntityRepository::add_record(EntityRecord record) {
  if (records_.count(record.id)) throw Error("duplicate entity id " + std::to_string(record.id));
  std::vector<Variant> variants;
  insert_sorted(variants, {"en", record.canonical_en});
  for (auto& v : record.variants) insert_sorted(variants, std::move(v));
  record.variants = std::move(variants);
  for (const auto& v : record.variants) index_variant(record.id, v);
  records_.emplace(record.id, std::move(record));
}

std::uint64_t EntityRepository::merge_or_insert(std::string_view name, std::string_view lang,
                                                double threshold) {
  const EntityRecord* best = nullptr;
  double best_sim = -1.0;
  for (const auto& [id, rec] : records_) {
    for (const auto& v : rec.variants) {
      const double s = similarity(name, v.form);
      if (s > best_sim) {
        best_sim = s;
        best = &rec;
      }
    }
  }
  if (best && best_sim >= threshold) {
    auto& rec = records_.at(best->id);
    const bool known = std::any_of(rec.variants.begin(), rec.variants.end(), [&](const Variant& v) {
      return v.form == name && (v.lang == lang || v.lang == "en");
    });
    if (!known) {
      Variant v{std::string(lang), std::string(name)};
      insert_sorted(rec.variants, v);
      index_variant(rec.id, v);
    }
    return rec.id;
  }
  const std::uint64_t id = records_.empty() ? 1 : records_.rbegin()->first + 1;
  add_record(EntityRecord{id, std::string(name), {}});
  return id;
}

const EntityRecord* EntityRepository::find(std::uint64_t id) const {
  const auto it = records_.find(id);
  return it == records_.end() ? nullptr : &it->second;
}

std::size_t EntityRepository::variant_count() const {
  std::size_t n = 0;
  for (const auto& [id, rec] : records_) n += rec.variants.size();
  return n;
}

void EntityRepository::index_variant(std::uint64_t id, const Variant& v) {
  auto tokens = split_whitespace(v.form);
  if (tokens.empty()) return;
  auto& bucket = index_[tokens.front()];
  bucket.push_back({v.lang, std::move(tokens), id});
}

std::optional<EntityRepository::Match> EntityRepository::longest_match(
    std::span<const std::string> tokens, std::size_t pos, std::string_view lang) const {
  if (pos >= tokens.size()) return std::nullopt;
  const auto it = index_.find(tokens[pos]);
  if (it == index_.end()) return std::nullopt;
  std::optional<Match> best;
  for (const auto& e : it->second) {
    if (e.lang != lang && e.lang != "en") continue;
    if (pos + e.tokens.size() > tokens.size()) continue;
    if (!std::equal(e.tokens.begin(), e.tokens.end(), tokens.begin() + static_cast<std::ptrdiff_t>(pos)))
      continue;
    if (!best || e.tokens.size() > best->length || (e.tokens.size() == best->length && e.id < best->id))
      best = Match{e.id, e.tokens.size()};
  }
  return best;
}

std::vector<ConstrainedSpan> annotate_spans(const textprep::TokenizedSentence& ts,
                                            const EntityRepository& repo, std::string_view lang,
                                            const TriggerLexicon* lexicon) {
  std::vector<ConstrainedSpan> spans;
  const auto& tokens = ts.tokens;
  for (std::size_t i = 0; i < tokens.size();) {
    if (auto m = repo.longest_match(tokens, i, lang)) {
      spans.push_back({i, i + m->length, split_whitespace(repo.find(m->id)->canonical_en)});
      i += m->length;
    } else {
      ++i;
    }
  }
  if (lexicon) {
    std::vector<ConstrainedSpan> extra;
    for (const auto& mention : recognize(ts, *lexicon)) {
      const bool overlaps = std::any_of(spans.begin(), spans.end(), [&](const ConstrainedSpan& s) {
        return mention.start < s.end && s.start < mention.end;
      });
      if (overlaps) continue;
      extra.push_back({mention.start, mention.end,
                       {tokens.begin() + static_cast<std::ptrdiff_t>(mention.start),
                        tokens.begin() + static_cast<std::ptrdiff_t>(mention.end)}});
    }
    spans.insert(spans.end(), extra.begin(), extra.end());
    std::sort(spans.begin(), spans.end(),
              [](const ConstrainedSpan& a, const ConstrainedSpan& b) { return a.start < b.start; });
  }
  return spans;
}

}  // namespace onts::entities
