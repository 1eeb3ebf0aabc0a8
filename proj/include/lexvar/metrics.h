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

#ifndef LEXVAR_METRICS_H_
#define LEXVAR_METRICS_H_

#include <cstddef>
#include <memory>
#include <string_view>
#include <vector>

#include "lexvar/phonoseg.h"

namespace lexvar {

inline constexpr ClassId kGap = 0xFFFF;

// Global alignment of two class sequences. Columns never hold two gaps.
struct Alignment {
  std::vector<ClassId> aligned_a;
  std::vector<ClassId> aligned_b;
  double score = 0.0;
};

// Needleman-Wunsch with the model's linear gap penalty. Traceback prefers
// match/mismatch, then a gap in `y`, then a gap in `x`.
Alignment AlignGlobal(const ClassSequence& x, const ClassSequence& y,
                      const SoundClassModel& model);

// Score of AlignGlobal without the traceback, in linear memory.
double AlignmentScore(const ClassSequence& x, const ClassSequence& y,
                      const SoundClassModel& model);

// 1 - 2 S(a,b) / (S(a,a) + S(b,b)), clamped to [0, 1].
double ScaDistance(const SegmentedForm& a, const SegmentedForm& b,
                   const SoundClassModel& model);
double ScaDistance(const ClassSequence& a, const ClassSequence& b,
                   const SoundClassModel& model);

// Token-level Levenshtein distance.
std::size_t EditDistance(const SegmentedForm& a, const SegmentedForm& b);

// EditDistance / max(|a|, |b|). Throws Error(kBothEmpty).
double NormalizedEditDistance(const SegmentedForm& a, const SegmentedForm& b);

enum class PairCategory { kIdentical, kSimilar, kDifferent };

std::string_view CategoryName(PairCategory category);

// Inverse of CategoryName. Throws Error(kUnknownLabel).
PairCategory ParseCategory(std::string_view name);

inline bool IsSame(PairCategory c) { return c != PairCategory::kDifferent; }

struct DistanceParams {
  double threshold = 0.5;
  std::shared_ptr<const SoundClassModel> model;

  // Default model, threshold 0.5.
  static DistanceParams Defaults();
  // Throws Error(kInvalidParams) unless 0 < threshold < 1 and model is set.
  void Validate() const;
};

PairCategory ClassifyPair(const SegmentedForm& a, const SegmentedForm& b,
                          const DistanceParams& params);

// Everything the study needs for one form pair, sharing the class mapping
// between the SCA distance and the category.
struct PairMetrics {
  double sca = 0.0;
  double ned = 0.0;
  std::size_t ed = 0;
  PairCategory category = PairCategory::kDifferent;
};

PairMetrics MeasurePair(const SegmentedForm& a, const SegmentedForm& b,
                        const DistanceParams& params);

}  // namespace lexvar

#endif  // LEXVAR_METRICS_H_
