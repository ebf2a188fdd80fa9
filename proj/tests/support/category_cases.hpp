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

// Worked category-definition cases: definition text, whitespace-separated
// document, expected match. Lowercase definition tokens match any casing;
// definition tokens containing an uppercase letter match only that exact form.

namespace onts::testing {

struct CategoryCase {
  const char* definition;
  const char* document;
  bool expected;
};

inline constexpr CategoryCase kCategoryCases[] = {
    {"quake", "a quake hit", true},
    {"quake", "a QUAKE hit", true},
    {"apple", "APPLE pie", true},
    {"Apple", "apple pie", false},
    {"Apple", "Apple pie", true},
    {"EU", "the Eu summit", false},
    {"eu", "the EU summit", true},
    {"über", "ÜBER alles", true},
    {"terror*", "terrorism rises", true},
    {"terror*", "terror rises", true},
    {"terror*", "the error", false},
    {"Terror*", "terrorism", false},
    {"\"richter scale\"", "on the Richter scale", true},
    {"\"richter scale\"", "Richter and scale", false},
    {"quake AND damage", "quake caused damage", true},
    {"quake AND damage", "quake caused nothing", false},
    {"quake OR tremor", "a tremor", true},
    {"quake OR tremor", "calm day", false},
    {"NOT sport", "quake news", true},
    {"NOT sport", "sport news", false},
    {"quake AND NOT sport", "quake and Sport", false},
    {"quake NEAR/2 damage", "quake a damage", true},
    {"quake NEAR/2 damage", "quake a b damage", false},
    {"damage NEAR/3 quake", "quake a b damage", true},
    {"(war OR conflict) AND NOT \"peace talks\"", "war and peace talks", false},
    {"(war OR conflict) AND NOT \"peace talks\"", "conflict escalates", true},
    {"quake OR war AND peace", "quake", true},
    {"quake\t+2\ntremor\t+1\nTHRESHOLD\t3\n", "quake and tremor", true},
    {"quake\t+2\ntremor\t+1\nTHRESHOLD\t3\n", "quake alone", false},
    {"quake\t+2\nsport\t-3\nTHRESHOLD\t2\n", "quake Quake sport", false},
};

}  // namespace onts::testing
