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

#include <string>
#include <vector>

#include "onts/decoder/engine.hpp"

namespace onts::evalkit {

struct BenchmarkReport {
  std::size_t sentences = 0;
  std::size_t characters = 0;  // code points of the space-joined source sentences
  double total_seconds = 0.0;
  double mean_seconds = 0.0;  // per sentence, serial
  double p95_seconds = 0.0;
  double ms_per_char = 0.0;
  std::size_t pool_threads = 0;
  double pool_seconds = 0.0;  // same sentences fanned out over the pool
  double pool_sentences_per_second = 0.0;
};

inline constexpr std::size_t kMinBenchmarkSentences = 10;

// Decodes every sentence serially (timed one by one), then once more on a
// worker pool of `pool_threads` for a throughput figure. Throws onts::Error
// for fewer than 10 sentences.
BenchmarkReport benchmark(const decoder::TranslationEngine& engine,
                          const std::vector<std::vector<std::string>>& sentences, std::size_t pool_threads = 4);

std::string to_json(const BenchmarkReport& r);

}  // namespace onts::evalkit
