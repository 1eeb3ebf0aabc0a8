// Copyright 2026 The lexvar Authors
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

// Serial reference vs OpenMP batch comparison over a synthetic corpus.
//
//   bench_compare --benchmark_counters_tabular=true

#include <benchmark/benchmark.h>
#include <omp.h>

#include <map>
#include <random>
#include <string>
#include <vector>

#include "lexvar/compare.h"

namespace {

using lexvar::Dataset;

const std::vector<std::string> kSegments{"p", "b", "t", "d",  "k",  "ɡ", "s", "ʃ", "m",
                                         "n", "l", "r", "w",  "j",  "h", "ts", "a", "e",
                                         "i", "o", "u", "ɛ", "ɔ", "aː", "ã"};

Dataset Synthetic(const std::string& id, int varieties, int concepts, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> seg(0, kSegments.size() - 1);
  std::uniform_int_distribution<int> len(2, 8);
  std::uniform_int_distribution<int> synonyms(1, 3);
  std::vector<lexvar::Variety> vs;
  std::map<std::string, std::string> cs;
  std::vector<lexvar::FormEntry> forms;
  for (int c = 0; c < concepts; ++c) cs.emplace(std::to_string(1000 + c), "c");
  for (int v = 0; v < varieties; ++v) {
    const std::string vid = id + std::to_string(v);
    vs.push_back({vid, vid, {}, {}, {}});
    for (int c = 0; c < concepts; ++c) {
      for (int k = synonyms(rng); k > 0; --k) {
        lexvar::SegmentedForm f;
        for (int n = len(rng); n > 0; --n) f.tokens.push_back(kSegments[seg(rng)]);
        forms.push_back({vid + "-" + std::to_string(forms.size()), vid,
                         std::to_string(1000 + c), std::move(f)});
      }
    }
  }
  return Dataset::Build(id, std::move(vs), std::move(cs), std::move(forms));
}

struct Corpus {
  Dataset a;
  Dataset b;
  std::vector<lexvar::PairJob> jobs;
};

const Corpus& Shared() {
  static const Corpus* corpus = [] {
    std::mt19937 rng(42);
    auto* c = new Corpus{Synthetic("a", 16, 100, rng), Synthetic("b", 16, 100, rng), {}};
    for (int i = 0; i < 16; ++i) {
      for (int j = 0; j < 16; j += 2) {
        c->jobs.push_back({&c->a, &c->b,
                           {"a" + std::to_string(i), "b" + std::to_string(j),
                            lexvar::PairOrigin::kManualSelection}});
      }
    }
    return c;
  }();
  return *corpus;
}

void BM_ComparePairsSerial(benchmark::State& state) {
  const Corpus& c = Shared();
  const auto params = lexvar::DistanceParams::Defaults();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lexvar::ComparePairsSerial(c.jobs, params));
  }
  state.counters["pairs/s"] = benchmark::Counter(static_cast<double>(c.jobs.size()),
                                                 benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_ComparePairsSerial)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ComparePairsOpenMP(benchmark::State& state) {
  const Corpus& c = Shared();
  const auto params = lexvar::DistanceParams::Defaults();
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(lexvar::ComparePairs(c.jobs, params));
  }
  state.counters["pairs/s"] = benchmark::Counter(static_cast<double>(c.jobs.size()),
                                                 benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_ComparePairsOpenMP)
    ->Arg(1)
    ->Arg(2)
    ->Arg(4)
    ->Arg(8)
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_ScaDistance(benchmark::State& state) {
  std::mt19937 rng(7);
  const auto& model = lexvar::SoundClassModel::Default();
  std::uniform_int_distribution<std::size_t> seg(0, kSegments.size() - 1);
  lexvar::SegmentedForm x, y;
  for (int i = 0; i < state.range(0); ++i) {
    x.tokens.push_back(kSegments[seg(rng)]);
    y.tokens.push_back(kSegments[seg(rng)]);
  }
  for (auto _ : state) benchmark::DoNotOptimize(lexvar::ScaDistance(x, y, model));
}
BENCHMARK(BM_ScaDistance)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
