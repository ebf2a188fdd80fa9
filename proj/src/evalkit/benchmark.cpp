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

#include "onts/evalkit/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <nlohmann/json.hpp>

#include "onts/common/error.hpp"
#include "onts/common/strings.hpp"
#include "onts/common/thread_pool.hpp"
#include "onts/common/unicode.hpp"
#include "onts/decoder/translate.hpp"

namespace onts::evalkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

}  // namespace

BenchmarkReport benchmark(const decoder::TranslationEngine& engine,
                          const std::vector<std::vector<std::string>>& sentences, std::size_t pool_threads) {
  if (sentences.size() < kMinBenchmarkSentences)
    throw Error("benchmark needs at least " + std::to_string(kMinBenchmarkSentences) + " sentences, got " +
                std::to_string(sentences.size()));
  BenchmarkReport r;
  r.sentences = sentences.size();
  std::vector<double> times;
  times.reserve(sentences.size());
  for (const auto& s : sentences) {
    r.characters += unicode::char_count(join(s, " "));
    const auto start = Clock::now();
    decoder::translate(s, {}, engine);
    times.push_back(seconds_since(start));
  }
  for (double t : times) r.total_seconds += t;
  r.mean_seconds = r.total_seconds / static_cast<double>(times.size());
  std::sort(times.begin(), times.end());
  // Nearest-rank percentile.
  const auto rank = static_cast<std::size_t>(std::ceil(0.95 * static_cast<double>(times.size())));
  r.p95_seconds = times[std::max<std::size_t>(rank, 1) - 1];
  r.ms_per_char = r.characters == 0 ? 0.0 : r.total_seconds * 1000.0 / static_cast<double>(r.characters);

  r.pool_threads = std::max<std::size_t>(pool_threads, 1);
  ThreadPool pool(r.pool_threads);
  const auto start = Clock::now();
  pool.map(sentences.size(), [&](std::size_t i) { return decoder::translate(sentences[i], {}, engine).score; });
  r.pool_seconds = seconds_since(start);
  r.pool_sentences_per_second =
      r.pool_seconds > 0.0 ? static_cast<double>(sentences.size()) / r.pool_seconds : 0.0;
  return r;
}

std::string to_json(const BenchmarkReport& r) {
  return nlohmann::json{{"sentences", r.sentences},
                        {"characters", r.characters},
                        {"total_seconds", r.total_seconds},
                        {"mean_seconds_per_sentence", r.mean_seconds},
                        {"p95_seconds_per_sentence", r.p95_seconds},
                        {"ms_per_char", r.ms_per_char},
                        {"pool_threads", r.pool_threads},
                        {"pool_seconds", r.pool_seconds},
                        {"pool_sentences_per_second", r.pool_sentences_per_second}}
      .dump();
}

}  // namespace onts::evalkit
