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

#include "lexvar/compare.h"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <set>
#include <utility>

namespace lexvar {

namespace {

// Sum in ascending order so the result does not depend on pair order.
double CanonicalSum(std::vector<double>& values) {
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum;
}

std::vector<std::string> SharedConcepts(const VarietyPair& pair, const Dataset& a,
                                        const Dataset& b) {
  if (a.FindVariety(pair.variety_a) == nullptr) {
    throw Error(ErrorCode::kUnknownVariety, pair.variety_a + " not in " + a.id());
  }
  if (b.FindVariety(pair.variety_b) == nullptr) {
    throw Error(ErrorCode::kUnknownVariety, pair.variety_b + " not in " + b.id());
  }
  std::set<std::string> ca = a.ConceptsOf(pair.variety_a);
  std::set<std::string> cb = b.ConceptsOf(pair.variety_b);
  std::vector<std::string> shared;
  std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(),
                        std::back_inserter(shared));
  return shared;
}

std::vector<SegmentedForm> FormsOf(const Dataset& ds, const std::string& variety,
                                   const std::string& concept_id) {
  std::vector<SegmentedForm> out;
  for (const FormEntry* entry : ds.SlotForms(variety, concept_id)) {
    out.push_back(entry->form);
  }
  return out;
}

}  // namespace

SlotScores CompareSlot(const std::vector<SegmentedForm>& forms_a,
                       const std::vector<SegmentedForm>& forms_b,
                       const DistanceParams& params) {
  if (forms_a.empty() || forms_b.empty()) {
    throw Error(ErrorCode::kEmptySlot, "slot without forms on one side");
  }
  const std::size_t n = forms_a.size() * forms_b.size();
  std::size_t identical = 0;
  std::size_t similar = 0;
  std::size_t ed = 0;
  std::vector<double> sca;
  std::vector<double> ned;
  sca.reserve(n);
  ned.reserve(n);
  for (const SegmentedForm& fa : forms_a) {
    for (const SegmentedForm& fb : forms_b) {
      PairMetrics m = MeasurePair(fa, fb, params);
      if (m.category == PairCategory::kIdentical) ++identical;
      if (IsSame(m.category)) ++similar;
      ed += m.ed;
      sca.push_back(m.sca);
      ned.push_back(m.ned);
    }
  }
  const double denom = static_cast<double>(n);
  SlotScores out;
  out.n_pairs = n;
  out.means.identical = static_cast<double>(identical) / denom;
  out.means.similar = static_cast<double>(similar) / denom;
  out.means.sca = CanonicalSum(sca) / denom;
  out.means.ned = CanonicalSum(ned) / denom;
  out.means.ed = static_cast<double>(ed) / denom;
  return out;
}

PairResult ComparePair(const VarietyPair& pair, const Dataset& a, const Dataset& b,
                       const DistanceParams& params) {
  std::vector<std::string> shared = SharedConcepts(pair, a, b);
  if (shared.empty()) {
    throw Error(ErrorCode::kNoSharedConcepts, pair.id());
  }
  PairResult result;
  result.pair = pair;
  result.n_concepts = shared.size();
  std::array<double, MetricValues::kCount> sums{};
  for (const std::string& concept_id : shared) {
    SlotScores slot = CompareSlot(FormsOf(a, pair.variety_a, concept_id),
                                  FormsOf(b, pair.variety_b, concept_id), params);
    slot.concept_id = concept_id;
    std::array<double, MetricValues::kCount> v = slot.means.ToArray();
    for (std::size_t k = 0; k < v.size(); ++k) sums[k] += v[k];
    result.slots.push_back(std::move(slot));
  }
  for (double& s : sums) s /= static_cast<double>(shared.size());
  result.means = MetricValues::FromArray(sums);
  return result;
}

std::vector<FormPairPrediction> PredictPair(const VarietyPair& pair, const Dataset& a,
                                            const Dataset& b,
                                            const DistanceParams& params) {
  std::vector<FormPairPrediction> out;
  const std::string pair_id = pair.id();
  for (const std::string& concept_id : SharedConcepts(pair, a, b)) {
    for (const FormEntry* fa : a.SlotForms(pair.variety_a, concept_id)) {
      for (const FormEntry* fb : b.SlotForms(pair.variety_b, concept_id)) {
        PairMetrics m = MeasurePair(fa->form, fb->form, params);
        out.push_back({pair_id, concept_id, fa->id, fb->id, m.category, m.sca});
      }
    }
  }
  return out;
}

GroupSummary AggregateGroup(const std::vector<PairResult>& results, std::string group) {
  if (results.empty()) {
    throw Error(ErrorCode::kEmptyGroup, group.empty() ? "<unnamed>" : group);
  }
  GroupSummary out;
  out.group = std::move(group);
  out.n_pairs = results.size();
  const double n = static_cast<double>(results.size());
  // Shifted by the first value: a constant list gives exactly that constant
  // and a zero deviation.
  const std::array<double, MetricValues::kCount> origin = results.front().means.ToArray();
  std::array<double, MetricValues::kCount> mean{};
  std::array<double, MetricValues::kCount> dev{};
  for (std::size_t k = 0; k < MetricValues::kCount; ++k) {
    double shift = 0.0;
    for (const PairResult& r : results) shift += r.means.ToArray()[k] - origin[k];
    shift /= n;
    double sq = 0.0;
    for (const PairResult& r : results) {
      double d = r.means.ToArray()[k] - origin[k] - shift;
      sq += d * d;
    }
    mean[k] = origin[k] + shift;
    dev[k] = std::sqrt(sq / n);
  }
  out.mean = MetricValues::FromArray(mean);
  out.std = MetricValues::FromArray(dev);
  return out;
}

namespace {

PairOutcome RunJob(const PairJob& job, const DistanceParams& params,
                   bool with_predictions) {
  PairOutcome outcome;
  try {
    outcome.result = ComparePair(job.pair, *job.a, *job.b, params);
    if (with_predictions) {
      outcome.predictions = PredictPair(job.pair, *job.a, *job.b, params);
    }
  } catch (const Error& e) {
    outcome.result.reset();
    outcome.predictions.clear();
    outcome.error = e;
  }
  return outcome;
}

}  // namespace

std::vector<PairOutcome> ComparePairsSerial(const std::vector<PairJob>& jobs,
                                            const DistanceParams& params,
                                            bool with_predictions) {
  std::vector<PairOutcome> out;
  out.reserve(jobs.size());
  for (const PairJob& job : jobs) out.push_back(RunJob(job, params, with_predictions));
  return out;
}

std::vector<PairOutcome> ComparePairs(const std::vector<PairJob>& jobs,
                                      const DistanceParams& params,
                                      bool with_predictions) {
  std::vector<PairOutcome> out(jobs.size());
  const auto n = static_cast<std::ptrdiff_t>(jobs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] =
        RunJob(jobs[static_cast<std::size_t>(i)], params, with_predictions);
  }
  return out;
}

}  // namespace lexvar
