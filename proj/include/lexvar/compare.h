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

#ifndef LEXVAR_COMPARE_H_
#define LEXVAR_COMPARE_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lexvar/corpus.h"
#include "lexvar/error.h"
#include "lexvar/metrics.h"

namespace lexvar {

// The five study metrics, in report column order.
struct MetricValues {
  double identical = 0.0;
  double similar = 0.0;
  double sca = 0.0;
  double ned = 0.0;
  double ed = 0.0;

  static constexpr std::size_t kCount = 5;
  std::array<double, kCount> ToArray() const {
    return {identical, similar, sca, ned, ed};
  }
  static MetricValues FromArray(const std::array<double, kCount>& v) {
    return {v[0], v[1], v[2], v[3], v[4]};
  }
};

struct SlotScores {
  std::string concept_id;
  std::size_t n_pairs = 0;
  MetricValues means;
};

// All |a| x |b| form pairs of one concept slot, averaged.
// Throws Error(kEmptySlot).
SlotScores CompareSlot(const std::vector<SegmentedForm>& forms_a,
                       const std::vector<SegmentedForm>& forms_b,
                       const DistanceParams& params);

struct PairResult {
  VarietyPair pair;
  std::size_t n_concepts = 0;
  MetricValues means;  // unweighted over slots
  std::vector<SlotScores> slots;
};

// Throws Error(kUnknownVariety) or Error(kNoSharedConcepts).
PairResult ComparePair(const VarietyPair& pair, const Dataset& a,
                       const Dataset& b, const DistanceParams& params);

// One categorized form pair, the unit gold annotations are scored against.
struct FormPairPrediction {
  std::string pair_id;
  std::string concept_id;
  std::string form_a_id;
  std::string form_b_id;
  PairCategory category = PairCategory::kDifferent;
  double sca = 0.0;
};

// Every cross-slot form pair of the shared concepts, in concept order.
std::vector<FormPairPrediction> PredictPair(const VarietyPair& pair,
                                            const Dataset& a, const Dataset& b,
                                            const DistanceParams& params);

struct GroupSummary {
  std::string group;
  std::size_t n_pairs = 0;
  MetricValues mean;
  MetricValues std;  // population standard deviation
};

// Throws Error(kEmptyGroup).
GroupSummary AggregateGroup(const std::vector<PairResult>& results,
                            std::string group);

// A unit of batch work: one variety pair between two loaded datasets.
struct PairJob {
  const Dataset* a = nullptr;
  const Dataset* b = nullptr;
  VarietyPair pair;
};

struct PairOutcome {
  std::optional<PairResult> result;
  std::optional<Error> error;
  std::vector<FormPairPrediction> predictions;
};

// Reference implementation: jobs evaluated in order on the calling thread.
std::vector<PairOutcome> ComparePairsSerial(const std::vector<PairJob>& jobs,
                                            const DistanceParams& params,
                                            bool with_predictions = false);

// OpenMP over jobs. Output is index-aligned with `jobs` and bitwise equal to
// ComparePairsSerial regardless of thread count.
std::vector<PairOutcome> ComparePairs(const std::vector<PairJob>& jobs,
                                      const DistanceParams& params,
                                      bool with_predictions = false);

}  // namespace lexvar

#endif  // LEXVAR_COMPARE_H_
