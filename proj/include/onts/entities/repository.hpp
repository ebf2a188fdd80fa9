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
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "onts/common/constrained_span.hpp"
#include "onts/entities/recognizer.hpp"
#include "onts/textprep/tokenizer.hpp"

namespace onts::entities {

struct Variant {
  std::string lang;
  std::string form;

  auto operator<=>(const Variant&) const = default;
};

struct EntityRecord {
  std::uint64_t id = 0;
  std::string canonical_en;
  std::vector<Variant> variants;  // sorted, unique; includes ("en", canonical_en)
};

using onts::ConstrainedSpan;

// Name repository with similarity-based variant merging. The repository is a
// value type: copy it to take a snapshot for concurrent readers; mutate only
// from a single writer.
class EntityRepository {
 public:
  static constexpr double kDefaultMergeThreshold = 0.8;

  // TSV: id<TAB>canonical_en<TAB>lang<TAB>variant, one variant per line.
  static EntityRepository load(std::istream& in);
  void save(std::ostream& out) const;

  // Adds `name` as a variant of the most similar record when that similarity
  // reaches `threshold` (ties: higher similarity, then lower id); otherwise
  // creates a record with canonical_en = name. Forms a record already carries
  // under `lang` or "en" are not duplicated.
  std::uint64_t merge_or_insert(std::string_view name, std::string_view lang,
                                double threshold = kDefaultMergeThreshold);

  // Inserts a record verbatim (fixtures, loading). Throws on duplicate id.
  void add_record(EntityRecord record);

  const EntityRecord* find(std::uint64_t id) const;
  std::size_t size() const { return records_.size(); }
  std::size_t variant_count() const;
  const std::map<std::uint64_t, EntityRecord>& records() const { return records_; }

  struct Match {
    std::uint64_t id = 0;
    std::size_t length = 0;  // tokens
  };
  // Longest exact, case-sensitive variant match starting at `pos`, over
  // variants of `lang` and English canonical forms.
  std::optional<Match> longest_match(std::span<const std::string> tokens, std::size_t pos,
                                     std::string_view lang) const;

 private:
  void index_variant(std::uint64_t id, const Variant& v);

  std::map<std::uint64_t, EntityRecord> records_;
  // first token -> (lang, tokens, record id)
  struct Entry {
    std::string lang;
    std::vector<std::string> tokens;
    std::uint64_t id;
  };
  std::unordered_map<std::string, std::vector<Entry>> index_;
};

// Entity spans for the decoder: repository matches are forced to the
// canonical English tokens; recognized mentions without a repository match
// are copied through unchanged. Result is sorted and disjoint.
std::vector<ConstrainedSpan> annotate_spans(const textprep::TokenizedSentence& ts,
                                            const EntityRepository& repo, std::string_view lang,
                                            const TriggerLexicon* lexicon = nullptr);

}  // namespace onts::entities
