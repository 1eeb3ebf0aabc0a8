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

#ifndef LEXVAR_EVAL_H_
#define LEXVAR_EVAL_H_

#include <cstddef>
#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lexvar/compare.h"

namespace lexvar {

enum class GoldLabel { kSame, kDifferent };

struct GoldRecord {
  std::string pair_id;
  std::string concept_id;
  std::string form_a_id;
  std::string form_b_id;
  GoldLabel label = GoldLabel::kSame;
};

struct GoldAnnotations {
  std::vector<GoldRecord> records;  // file order
};

// Tab-separated language_pair_id, concept_id, form_a_id, form_b_id, label
// (same|different). An optional header row is accepted; '#' comments.
// Throws Error(kMalformedRow), Error(kDuplicateRecord), Error(kUnknownLabel);
// a file without records is a kMalformedRow.
GoldAnnotations ParseGold(std::string_view text, std::string_view source);
GoldAnnotations LoadGold(const std::filesystem::path& path);

struct Confusion {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;
};

struct EvalRow {
  std::string language;
  Confusion counts;
  double precision = 0.0;
  double recall = 0.0;
  double f_score = 0.0;
  // Set when the denominator was empty and 0 was reported instead.
  bool precision_undefined = false;
  bool recall_undefined = false;
};

// Fills precision, recall and F from counts.
EvalRow ScoreConfusion(std::string language, const Confusion& counts);

struct EvalResult {
  std::vector<EvalRow> rows;  // sorted by language pair id
  EvalRow total;              // pooled counts
};

struct EvalOptions {
  // Which gold label counts as the positive class.
  GoldLabel positive = GoldLabel::kSame;
};

// Predictions are matched to gold records by pair id and unordered form
// ids. Throws Error(kMissingPrediction).
EvalResult EvaluatePredictions(const std::vector<FormPairPrediction>& predictions,
                               const GoldAnnotations& gold,
                               const EvalOptions& options = {});

// Language, Precision, Recall, F-Score and a TOTAL row.
void WriteEvalTable(std::ostream& os, const EvalResult& result,
                    int decimals = 2);

}  // namespace lexvar

#endif  // LEXVAR_EVAL_H_
