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

// Reference evaluator for category definitions, written independently of the
// library matcher: ASCII-only case handling, explicit occurrence sets and
// all-pairs proximity checks. Used by unit and acceptance tests.

#include <cctype>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "onts/categorizer/category.hpp"

namespace onts::testing {

inline std::string ascii_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

inline bool oracle_token_match(const std::string& def, bool prefix, const std::string& tok) {
  bool upper = false;
  for (char c : def) upper |= std::isupper(static_cast<unsigned char>(c)) != 0;
  const std::string a = upper ? def : ascii_lower(def);
  const std::string b = upper ? tok : ascii_lower(tok);
  if (prefix) return b.size() >= a.size() && b.substr(0, a.size()) == a;
  return a == b;
}

inline std::set<std::size_t> oracle_occurrences(const categorizer::Pattern& p,
                                                const std::vector<std::string>& doc) {
  std::set<std::size_t> occ;
  for (std::size_t s = 0; s < doc.size(); ++s) {
    if (s + p.tokens.size() > doc.size()) break;
    bool all = true;
    for (std::size_t k = 0; k < p.tokens.size(); ++k) {
      if (!oracle_token_match(p.tokens[k], p.wildcard && k + 1 == p.tokens.size(), doc[s + k]))
        all = false;
    }
    if (all) occ.insert(s);
  }
  return occ;
}

inline bool oracle_eval(const categorizer::Expr& e, const std::vector<std::string>& doc) {
  using K = categorizer::Expr::Kind;
  switch (e.kind) {
    case K::kLeaf:
      return !oracle_occurrences(e.pattern, doc).empty();
    case K::kNot:
      return !oracle_eval(e.children[0], doc);
    case K::kAnd: {
      bool r = true;
      for (const auto& c : e.children) r = r && oracle_eval(c, doc);
      return r;
    }
    case K::kOr: {
      bool r = false;
      for (const auto& c : e.children) r = r || oracle_eval(c, doc);
      return r;
    }
    case K::kNear: {
      const auto a = oracle_occurrences(e.children[0].pattern, doc);
      const auto b = oracle_occurrences(e.children[1].pattern, doc);
      for (std::size_t i : a)
        for (std::size_t j : b) {
          const long d = static_cast<long>(i) - static_cast<long>(j);
          if ((d < 0 ? -d : d) <= e.distance) return true;
        }
      return false;
    }
  }
  return false;
}

// Random definitions/documents over a tiny vocabulary with case variants so
// that matches, misses, and both case-rule directions all occur.
class CategoryFuzzer {
 public:
  explicit CategoryFuzzer(unsigned seed) : rng_(seed) {}

  std::vector<std::string> document(std::size_t max_len = 50) {
    std::vector<std::string> doc(pick(max_len + 1));
    for (auto& t : doc) t = surface();
    return doc;
  }

  std::string definition(int depth = 3) {
    const auto r = pick(depth > 0 ? 6 : 2);
    switch (r) {
      case 0: return pattern();
      case 1: return pattern() + " NEAR/" + std::to_string(1 + pick(6)) + " " + pattern();
      case 2: return "NOT " + wrap(definition(depth - 1));
      case 3: return wrap(definition(depth - 1)) + " AND " + wrap(definition(depth - 1));
      case 4: return wrap(definition(depth - 1)) + " OR " + wrap(definition(depth - 1));
      default: return "(" + definition(depth - 1) + ")";
    }
  }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  std::string wrap(const std::string& s) { return "(" + s + ")"; }

  std::string word() {
    static const char* kWords[] = {"quake", "damage", "war", "apple", "terror", "terrorism", "eu", "pie"};
    return kWords[pick(8)];
  }

  std::string recase(std::string w) {
    switch (pick(3)) {
      case 0: return w;
      case 1: w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0]))); return w;
      default:
        for (char& c : w) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        return w;
    }
  }

  std::string surface() { return recase(word()); }

  std::string pattern() {
    std::string w = recase(word());
    switch (pick(4)) {
      case 0: return w.substr(0, 1 + pick(w.size())) + "*";
      case 1: return "\"" + w + " " + recase(word()) + "\"";
      default: return w;
    }
  }

  std::mt19937 rng_;
};

}  // namespace onts::testing
