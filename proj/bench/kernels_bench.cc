// Copyright 2026 The mtsum Authors.
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

// Serial versus OpenMP timings for the per-document and per-sentence
// kernels. The fixture cluster is replicated to give the threads work.

#include <benchmark/benchmark.h>

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "mtsum/config.h"
#include "mtsum/corpus.h"
#include "mtsum/keyphrase.h"
#include "mtsum/normalizer.h"
#include "mtsum/summarizer.h"
#include "mtsum/topics.h"

namespace mtsum {
namespace {

constexpr int kCopies = 8;

struct Workload {
  Cluster cluster;
  ExtractorConfig extractor;
  std::vector<DocumentProfile> profiles;
  TopicTable table;
};

const Workload &Load() {
  static const Workload workload = [] {
    const std::filesystem::path root = MTSUM_SOURCE_DIR;
    const CaseFoldNormalizer normalizer;
    std::vector<std::pair<std::string, std::string>> texts;
    for (int copy = 0; copy < kCopies; ++copy) {
      for (const auto &entry : std::filesystem::directory_iterator(root / "tests/fixtures/quake")) {
        texts.emplace_back(entry.path().stem().string() + "_" + std::to_string(copy),
                           ReadTextFile(entry.path()));
      }
    }
    Workload w;
    w.cluster = BuildCluster("bench", texts, normalizer);
    w.extractor.stopwords = LoadStopwords(root / "data/stopwords-en.txt", normalizer);
    w.profiles = ExtractProfiles(w.cluster, w.extractor, Execution::kSerial);
    w.table = BuildTopicTable(w.profiles, TopicScoreMode::kMaxCrts, Execution::kSerial);
    return w;
  }();
  return workload;
}

Execution Mode(const benchmark::State &state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

void BM_ExtractProfiles(benchmark::State &state) {
  const Workload &w = Load();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExtractProfiles(w.cluster, w.extractor, Mode(state)));
  }
}

void BM_ComputeRelevances(benchmark::State &state) {
  const Workload &w = Load();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeRelevances(w.profiles, Mode(state)));
  }
}

void BM_MatchSentences(benchmark::State &state) {
  const Workload &w = Load();
  const TopicMatcher matcher(w.table.topics);
  for (auto _ : state) {
    benchmark::DoNotOptimize(MatchSentences(w.cluster, matcher, Mode(state)));
  }
}

BENCHMARK(BM_ExtractProfiles)->ArgName("parallel")->Arg(0)->Arg(1);
BENCHMARK(BM_ComputeRelevances)->ArgName("parallel")->Arg(0)->Arg(1);
BENCHMARK(BM_MatchSentences)->ArgName("parallel")->Arg(0)->Arg(1);

}  // namespace
}  // namespace mtsum

BENCHMARK_MAIN();
