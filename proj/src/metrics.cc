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

#include "lexvar/metrics.h"

#include <algorithm>
#include <string>

#include "lexvar/error.h"

namespace lexvar {

Alignment AlignGlobal(const ClassSequence& x, const ClassSequence& y,
                      const SoundClassModel& model) {
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  const double gap = model.gap_penalty();
  const std::size_t w = m + 1;
  std::vector<double> h((n + 1) * w);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return h[i * w + j]; };

  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = static_cast<double>(i) * gap;
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<double>(j) * gap;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      double diag = at(i - 1, j - 1) + model.score(x.classes[i - 1], y.classes[j - 1]);
      double up = at(i - 1, j) + gap;
      double left = at(i, j - 1) + gap;
      at(i, j) = std::max({diag, up, left});
    }
  }

  Alignment out;
  out.score = at(n, m);
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 &&
        at(i, j) == at(i - 1, j - 1) +
                        model.score(x.classes[i - 1], y.classes[j - 1])) {
      out.aligned_a.push_back(x.classes[--i]);
      out.aligned_b.push_back(y.classes[--j]);
    } else if (i > 0 && at(i, j) == at(i - 1, j) + gap) {
      out.aligned_a.push_back(x.classes[--i]);
      out.aligned_b.push_back(kGap);
    } else {
      out.aligned_a.push_back(kGap);
      out.aligned_b.push_back(y.classes[--j]);
    }
  }
  std::reverse(out.aligned_a.begin(), out.aligned_a.end());
  std::reverse(out.aligned_b.begin(), out.aligned_b.end());
  return out;
}

double AlignmentScore(const ClassSequence& x, const ClassSequence& y,
                      const SoundClassModel& model) {
  const std::size_t m = y.size();
  const double gap = model.gap_penalty();
  std::vector<double> prev(m + 1);
  std::vector<double> cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<double>(j) * gap;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    cur[0] = static_cast<double>(i) * gap;
    const ClassId xi = x.classes[i - 1];
    for (std::size_t j = 1; j <= m; ++j) {
      cur[j] = std::max({prev[j - 1] + model.score(xi, y.classes[j - 1]),
                         prev[j] + gap, cur[j - 1] + gap});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

double ScaDistance(const ClassSequence& a, const ClassSequence& b,
                   const SoundClassModel& model) {
  const double self = AlignmentScore(a, a, model) + AlignmentScore(b, b, model);
  // Only sequences made entirely of unknown classes have no self score.
  if (self <= 0.0) return a == b ? 0.0 : 1.0;
  // Canonical argument order keeps the result bitwise symmetric even for
  // models with non-integral scores.
  const bool swap = b.classes < a.classes;
  const double cross = swap ? AlignmentScore(b, a, model) : AlignmentScore(a, b, model);
  const double d = 1.0 - 2.0 * cross / self;
  return std::clamp(d, 0.0, 1.0);
}

double ScaDistance(const SegmentedForm& a, const SegmentedForm& b,
                   const SoundClassModel& model) {
  if (a.tokens == b.tokens) return 0.0;
  return ScaDistance(ToClasses(a, model), ToClasses(b, model), model);
}

std::size_t EditDistance(const SegmentedForm& a, const SegmentedForm& b) {
  const auto& x = a.tokens;
  const auto& y = b.tokens;
  std::vector<std::size_t> prev(y.size() + 1);
  std::vector<std::size_t> cur(y.size() + 1);
  for (std::size_t j = 0; j <= y.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= x.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= y.size(); ++j) {
      std::size_t sub = prev[j - 1] + (x[i - 1] == y[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

double NormalizedEditDistance(const SegmentedForm& a, const SegmentedForm& b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) {
    throw Error(ErrorCode::kBothEmpty, "normalized edit distance of two empty forms");
  }
  return static_cast<double>(EditDistance(a, b)) / static_cast<double>(longest);
}

std::string_view CategoryName(PairCategory category) {
  switch (category) {
    case PairCategory::kIdentical: return "Identical";
    case PairCategory::kSimilar: return "Similar";
    case PairCategory::kDifferent: return "Different";
  }
  return "Different";
}

PairCategory ParseCategory(std::string_view name) {
  if (name == "Identical") return PairCategory::kIdentical;
  if (name == "Similar") return PairCategory::kSimilar;
  if (name == "Different") return PairCategory::kDifferent;
  throw Error(ErrorCode::kUnknownLabel, "category " + std::string(name));
}

DistanceParams DistanceParams::Defaults() {
  DistanceParams params;
  params.model = std::make_shared<SoundClassModel>(SoundClassModel::Default());
  return params;
}

void DistanceParams::Validate() const {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw Error(ErrorCode::kInvalidParams,
                "threshold must lie strictly between 0 and 1, got " +
                    std::to_string(threshold));
  }
  if (!model) throw Error(ErrorCode::kInvalidParams, "no sound-class model");
}

namespace {

PairCategory Categorize(bool identical, double sca, double threshold) {
  if (identical) return PairCategory::kIdentical;
  return sca < threshold ? PairCategory::kSimilar : PairCategory::kDifferent;
}

}  // namespace

PairCategory ClassifyPair(const SegmentedForm& a, const SegmentedForm& b,
                          const DistanceParams& params) {
  if (a.tokens == b.tokens) return PairCategory::kIdentical;
  return Categorize(false, ScaDistance(a, b, *params.model), params.threshold);
}

PairMetrics MeasurePair(const SegmentedForm& a, const SegmentedForm& b,
                        const DistanceParams& params) {
  PairMetrics out;
  const bool identical = a.tokens == b.tokens;
  out.sca = identical ? 0.0 : ScaDistance(a, b, *params.model);
  out.ed = EditDistance(a, b);
  out.ned = NormalizedEditDistance(a, b);
  out.category = Categorize(identical, out.sca, params.threshold);
  return out;
}

}  // namespace lexvar
