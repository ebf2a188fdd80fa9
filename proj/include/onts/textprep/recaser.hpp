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
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace onts::textprep {

struct SurfaceForm {
  std::string form;
  std::uint64_t count = 0;
};

// Unigram truecasing model: lowercased token -> preferred surface form.
class RecaseModel {
 public:
  // Counts surface forms per lowercased key. Sentence-initial tokens only
  // decide a key's form when the key never occurs elsewhere. Ties go to the
  // lexicographically smallest form.
  static RecaseModel train(std::span<const std::vector<std::string>> cased_sentences);

  std::optional<SurfaceForm> lookup(std::string_view lowered) const;
  std::size_t size() const { return forms_.size(); }

  // "key<TAB>count<TAB>surface" per line.
  void save(std::ostream& out) const;
  static RecaseModel load(std::istream& in);

  void set(std::string key, SurfaceForm form);

 private:
  std::unordered_map<std::string, SurfaceForm> forms_;
};

// Replaces every token by its model surface form (unseen tokens unchanged) and
// capitalizes the sentence-initial word. `keep` marks tokens whose casing is
// final already (forced entity translations); it may be empty.
std::vector<std::string> recase(std::span<const std::string> tokens, const RecaseModel& model,
                                std::span<const bool> keep = {});

// Index of the first token with a letter or digit, or tokens.size().
std::size_t sentence_initial_index(std::span<const std::string> tokens);

}  // namespace onts::textprep
