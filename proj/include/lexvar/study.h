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

#ifndef LEXVAR_STUDY_H_
#define LEXVAR_STUDY_H_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexvar/compare.h"
#include "lexvar/corpus.h"

namespace lexvar {

enum class PairingMode { kGlottocode, kManual };

std::string_view PairingModeName(PairingMode mode);
// Throws Error(kInvalidParams).
PairingMode ParsePairingMode(std::string_view name);

struct GroupConfig {
  std::string name;
  // Paths as written in the config; resolved against StudyConfig::base_dir.
  std::string dataset_a;
  std::string dataset_b;
  std::optional<std::string> pairs;
  std::optional<bool> strip_tones_a;
  std::optional<bool> strip_tones_b;
};

// Key-value study description:
//
//   threshold = 0.5
//   mode = manual
//   [group Indo-European]
//   dataset_a = ie/iecor
//   dataset_b = ie/starostin
//   pairs = ie/pairs.tsv
//   strip_tones_b = false
//
// Top-level keys: threshold, mode, model, strip_morpheme_boundaries,
// strip_tones. Group keys: dataset_a, dataset_b, pairs, strip_tones_a,
// strip_tones_b.
struct StudyConfig {
  std::filesystem::path base_dir;
  double threshold = 0.5;
  PairingMode mode = PairingMode::kGlottocode;
  std::optional<std::string> model;
  PreprocessOptions preprocess;
  std::vector<GroupConfig> groups;

  std::filesystem::path Resolve(const std::string& path) const;
};

// Throws Error(kMalformedConfig).
StudyConfig ParseStudyConfig(std::string_view text,
                             std::filesystem::path base_dir,
                             std::string_view source = "<config>");
StudyConfig LoadStudyConfig(const std::filesystem::path& path);

struct SkippedPair {
  VarietyPair pair;
  std::string reason;
};

struct GroupReport {
  std::string name;
  std::string dataset_a;
  std::string dataset_b;
  LoadLog log_a;
  LoadLog log_b;
  std::vector<PairResult> pairs;  // sorted by pair id
  std::vector<SkippedPair> skipped;
  GroupSummary summary;
};

struct RunMetadata {
  double threshold = 0.5;
  std::string model;
  PairingMode mode = PairingMode::kGlottocode;
  PreprocessOptions preprocess;
};

struct Report {
  RunMetadata meta;
  std::vector<GroupReport> groups;  // config order
  GroupSummary total;               // pooled over all pair results
  std::vector<FormPairPrediction> predictions;
};

struct StudyOptions {
  bool with_predictions = false;
  // Use ComparePairsSerial instead of the OpenMP kernel.
  bool serial = false;
};

// Both datasets of a group, with the config's preprocessing and the group's
// per-dataset tone flags applied.
std::pair<Dataset, Dataset> LoadGroupDatasets(const StudyConfig& config,
                                              const GroupConfig& group);

// The group's pairing under config.mode, sorted by (variety_a, variety_b).
// Throws Error(kMalformedConfig) in manual mode without a pairs file.
std::vector<VarietyPair> GroupPairs(const StudyConfig& config, const GroupConfig& group,
                                    const Dataset& a, const Dataset& b);

// Loads every dataset, builds pairings and compares them. Pairs without
// shared concepts are skipped and logged; a group left with no pairs is an
// Error(kEmptyGroup). Errors carry group and dataset context.
Report RunStudy(const StudyConfig& config, const DistanceParams& params,
                const StudyOptions& options = {});

enum class TableFormat { kTsv, kMarkdown };

// Group, Pairs, Identical, STD, Similar, STD, SCA, STD, NED, STD, ED, STD
// with a TOTAL row, preceded by run metadata and load/skip logs.
void WriteGroupTable(std::ostream& os, const Report& report,
                     TableFormat format = TableFormat::kTsv);
// One row per compared variety pair.
void WritePairTable(std::ostream& os, const Report& report,
                    TableFormat format = TableFormat::kTsv);
// language_pair_id, concept_id, form_a_id, form_b_id, category, sca.
void WritePredictions(std::ostream& os,
                      const std::vector<FormPairPrediction>& predictions);
// Throws Error(kMalformedRow) or Error(kUnknownLabel).
std::vector<FormPairPrediction> ParsePredictions(std::string_view text,
                                                 std::string_view source);

// A single table row in TSV form, e.g. for the TOTAL line.
std::string FormatSummaryRow(const GroupSummary& summary, std::string_view label);

}  // namespace lexvar

#endif  // LEXVAR_STUDY_H_
