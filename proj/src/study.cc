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

#include "lexvar/study.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

#include "lexvar/error.h"
#include "text.h"

namespace lexvar {

std::string_view PairingModeName(PairingMode mode) {
  return mode == PairingMode::kGlottocode ? "glottocode" : "manual";
}

PairingMode ParsePairingMode(std::string_view name) {
  if (name == "glottocode") return PairingMode::kGlottocode;
  if (name == "manual") return PairingMode::kManual;
  throw Error(ErrorCode::kInvalidParams,
              "mode must be glottocode or manual, got " + std::string(name));
}

std::filesystem::path StudyConfig::Resolve(const std::string& path) const {
  std::filesystem::path p(path);
  return p.is_absolute() ? p : base_dir / p;
}

StudyConfig ParseStudyConfig(std::string_view content, std::filesystem::path base_dir,
                             std::string_view source) {
  StudyConfig config;
  config.base_dir = std::move(base_dir);
  std::set<std::string> group_names;
  std::set<std::string> seen_keys;

  std::vector<std::string_view> lines = text::Lines(text::StripBom(content));
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::string where = std::string(source) + ":" + std::to_string(n + 1);
    auto fail = [&](const std::string& what) {
      return Error(ErrorCode::kMalformedConfig, where + ": " + what);
    };
    std::string_view line = text::Trim(lines[n]);
    if (line.empty() || line.front() == '#') continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw fail("unterminated section header");
      std::string_view inner = text::Trim(line.substr(1, line.size() - 2));
      if (inner.substr(0, 6) != "group " || text::Trim(inner.substr(6)).empty()) {
        throw fail("expected [group <name>]");
      }
      GroupConfig group;
      group.name = std::string(text::Trim(inner.substr(6)));
      if (!group_names.insert(group.name).second) {
        throw fail("duplicate group " + group.name);
      }
      config.groups.push_back(std::move(group));
      seen_keys.clear();
      continue;
    }

    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) throw fail("expected key = value");
    std::string key(text::Trim(line.substr(0, eq)));
    std::string value(text::Trim(line.substr(eq + 1)));
    if (key.empty()) throw fail("empty key");
    if (!seen_keys.insert(key).second) throw fail("repeated key " + key);
    auto as_bool = [&]() {
      std::optional<bool> b = text::ParseBool(value);
      if (!b) throw fail(key + " must be true or false");
      return *b;
    };
    auto as_path = [&]() {
      if (value.empty()) throw fail(key + " needs a path");
      return value;
    };

    if (config.groups.empty()) {
      if (key == "threshold") {
        std::optional<double> t = text::ParseDouble(value);
        if (!t || !(*t > 0.0 && *t < 1.0)) {
          throw fail("threshold must be a number strictly between 0 and 1");
        }
        config.threshold = *t;
      } else if (key == "mode") {
        try {
          config.mode = ParsePairingMode(value);
        } catch (const Error& e) {
          throw fail(e.message());
        }
      } else if (key == "model") {
        config.model = as_path();
      } else if (key == "strip_morpheme_boundaries") {
        config.preprocess.strip_morpheme_boundaries = as_bool();
      } else if (key == "strip_tones") {
        config.preprocess.strip_tones = as_bool();
      } else {
        throw fail("unknown key " + key);
      }
      continue;
    }

    GroupConfig& group = config.groups.back();
    if (key == "dataset_a") {
      group.dataset_a = as_path();
    } else if (key == "dataset_b") {
      group.dataset_b = as_path();
    } else if (key == "pairs") {
      group.pairs = as_path();
    } else if (key == "strip_tones_a") {
      group.strip_tones_a = as_bool();
    } else if (key == "strip_tones_b") {
      group.strip_tones_b = as_bool();
    } else {
      throw fail("unknown group key " + key);
    }
  }

  if (config.groups.empty()) {
    throw Error(ErrorCode::kMalformedConfig, std::string(source) + ": no [group] sections");
  }
  for (const GroupConfig& g : config.groups) {
    if (g.dataset_a.empty() || g.dataset_b.empty()) {
      throw Error(ErrorCode::kMalformedConfig,
                  std::string(source) + ": group " + g.name +
                      " needs dataset_a and dataset_b");
    }
  }
  return config;
}

StudyConfig LoadStudyConfig(const std::filesystem::path& path) {
  std::string content = text::ReadFile(path);
  return ParseStudyConfig(content, path.parent_path(), path.string());
}

std::pair<Dataset, Dataset> LoadGroupDatasets(const StudyConfig& config,
                                              const GroupConfig& group) {
  auto load = [&](const std::string& path, std::optional<bool> strip_tones) {
    PreprocessOptions opts = config.preprocess;
    if (strip_tones) opts.strip_tones = *strip_tones;
    try {
      return LoadDataset(config.Resolve(path), opts);
    } catch (const Error& e) {
      throw e.WithContext("group " + group.name);
    }
  };
  return {load(group.dataset_a, group.strip_tones_a), load(group.dataset_b, group.strip_tones_b)};
}

std::vector<VarietyPair> GroupPairs(const StudyConfig& config, const GroupConfig& group,
                                    const Dataset& a, const Dataset& b) {
  std::vector<VarietyPair> pairs;
  try {
    if (config.mode == PairingMode::kManual) {
      if (!group.pairs) {
        throw Error(ErrorCode::kMalformedConfig, "manual mode needs a pairs file");
      }
      pairs = LoadManualPairs(config.Resolve(*group.pairs), a, b);
    } else {
      pairs = GlottocodePairs(a, b);
    }
  } catch (const Error& e) {
    throw e.WithContext("group " + group.name);
  }
  std::sort(pairs.begin(), pairs.end(), [](const VarietyPair& x, const VarietyPair& y) {
    return std::tie(x.variety_a, x.variety_b) < std::tie(y.variety_a, y.variety_b);
  });
  return pairs;
}

Report RunStudy(const StudyConfig& config, const DistanceParams& params,
                const StudyOptions& options) {
  params.Validate();
  Report report;
  report.meta.threshold = params.threshold;
  report.meta.model = params.model->name();
  report.meta.mode = config.mode;
  report.meta.preprocess = config.preprocess;

  // Datasets must outlive the jobs that point into them.
  std::vector<std::pair<Dataset, Dataset>> datasets;
  datasets.reserve(config.groups.size());
  std::vector<PairJob> jobs;
  std::vector<std::size_t> job_group;

  for (std::size_t g = 0; g < config.groups.size(); ++g) {
    const GroupConfig& group = config.groups[g];
    datasets.push_back(LoadGroupDatasets(config, group));
    const Dataset& a = datasets.back().first;
    const Dataset& b = datasets.back().second;

    GroupReport gr;
    gr.name = group.name;
    gr.dataset_a = a.id();
    gr.dataset_b = b.id();
    gr.log_a = a.log();
    gr.log_b = b.log();
    report.groups.push_back(std::move(gr));

    std::vector<VarietyPair> pairs = GroupPairs(config, group, a, b);
    for (VarietyPair& pair : pairs) {
      jobs.push_back({&a, &b, std::move(pair)});
      job_group.push_back(g);
    }
  }

  std::vector<PairOutcome> outcomes =
      options.serial ? ComparePairsSerial(jobs, params, options.with_predictions)
                     : ComparePairs(jobs, params, options.with_predictions);

  std::vector<PairResult> pooled;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    GroupReport& gr = report.groups[job_group[i]];
    PairOutcome& outcome = outcomes[i];
    if (outcome.error) {
      if (outcome.error->code() != ErrorCode::kNoSharedConcepts) {
        throw outcome.error->WithContext("group " + gr.name + ", pair " +
                                         jobs[i].pair.id());
      }
      gr.skipped.push_back({jobs[i].pair, "no shared concepts"});
      continue;
    }
    pooled.push_back(*outcome.result);
    gr.pairs.push_back(std::move(*outcome.result));
    std::move(outcome.predictions.begin(), outcome.predictions.end(),
              std::back_inserter(report.predictions));
  }
  for (GroupReport& gr : report.groups) {
    try {
      gr.summary = AggregateGroup(gr.pairs, gr.name);
    } catch (const Error& e) {
      throw Error(e.code(), "group " + gr.name + " has no comparable variety pairs");
    }
  }
  report.total = AggregateGroup(pooled, "TOTAL");
  return report;
}

// --- writers -------------------------------------------------------------

namespace {

constexpr int kDecimals = 2;

std::string F(double v) { return text::Fixed(v, kDecimals); }

std::string ShortNumber(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::vector<std::string> SummaryCells(const GroupSummary& s, std::string_view label) {
  std::vector<std::string> cells{std::string(label), std::to_string(s.n_pairs)};
  std::array<double, MetricValues::kCount> mean = s.mean.ToArray();
  std::array<double, MetricValues::kCount> dev = s.std.ToArray();
  for (std::size_t k = 0; k < MetricValues::kCount; ++k) {
    cells.push_back(F(mean[k]));
    cells.push_back(F(dev[k]));
  }
  return cells;
}

void WriteRow(std::ostream& os, const std::vector<std::string>& cells,
              TableFormat format) {
  if (format == TableFormat::kTsv) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) os << '\t';
      os << cells[i];
    }
    os << '\n';
    return;
  }
  os << '|';
  for (const std::string& c : cells) os << ' ' << c << " |";
  os << '\n';
}

void WriteHeader(std::ostream& os, const std::vector<std::string>& header,
                 std::size_t left_aligned, TableFormat format) {
  WriteRow(os, header, format);
  if (format == TableFormat::kMarkdown) {
    os << '|';
    for (std::size_t i = 0; i < header.size(); ++i) {
      os << (i < left_aligned ? "---|" : "---:|");
    }
    os << '\n';
  }
}

void WriteMeta(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& meta,
               TableFormat format) {
  for (const auto& [key, value] : meta) {
    if (format == TableFormat::kTsv) {
      os << "# " << key << '\t' << value << '\n';
    } else {
      os << "- " << key << ": " << value << '\n';
    }
  }
  if (format == TableFormat::kMarkdown && !meta.empty()) os << '\n';
}

std::string LogText(const LoadLog& log) {
  return "empty_forms=" + std::to_string(log.empty_forms) +
         " unmapped_parameters=" + std::to_string(log.unmapped_parameters) +
         " forms_of_unmapped_parameters=" +
         std::to_string(log.forms_of_unmapped_parameters);
}

}  // namespace

std::string FormatSummaryRow(const GroupSummary& summary, std::string_view label) {
  std::ostringstream os;
  WriteRow(os, SummaryCells(summary, label), TableFormat::kTsv);
  std::string row = os.str();
  row.pop_back();
  return row;
}

void WriteGroupTable(std::ostream& os, const Report& report, TableFormat format) {
  std::vector<std::pair<std::string, std::string>> meta{
      {"threshold", ShortNumber(report.meta.threshold)},
      {"model", report.meta.model},
      {"mode", std::string(PairingModeName(report.meta.mode))},
      {"strip_morpheme_boundaries",
       report.meta.preprocess.strip_morpheme_boundaries ? "true" : "false"},
      {"strip_tones", report.meta.preprocess.strip_tones ? "true" : "false"},
      {"std", "population"},
      {"total", "pooled over all pairs"},
  };
  for (const GroupReport& g : report.groups) {
    meta.emplace_back("load", g.name + " A " + g.dataset_a + " " + LogText(g.log_a));
    meta.emplace_back("load", g.name + " B " + g.dataset_b + " " + LogText(g.log_b));
    for (const SkippedPair& s : g.skipped) {
      meta.emplace_back("skipped", g.name + " " + s.pair.id() + " " + s.reason);
    }
  }
  WriteMeta(os, meta, format);
  WriteHeader(os,
              {"Group", "Pairs", "Identical", "STD", "Similar", "STD", "SCA", "STD",
               "NED", "STD", "ED", "STD"},
              1, format);
  for (const GroupReport& g : report.groups) {
    WriteRow(os, SummaryCells(g.summary, g.name), format);
  }
  WriteRow(os, SummaryCells(report.total, "TOTAL"), format);
}

void WritePairTable(std::ostream& os, const Report& report, TableFormat format) {
  WriteHeader(os,
              {"Group", "Pair", "Variety_A", "Variety_B", "Origin", "Concepts",
               "Identical", "Similar", "SCA", "NED", "ED"},
              5, format);
  for (const GroupReport& g : report.groups) {
    for (const PairResult& r : g.pairs) {
      WriteRow(os,
               {g.name, r.pair.id(), r.pair.variety_a, r.pair.variety_b,
                std::string(OriginName(r.pair.origin)), std::to_string(r.n_concepts),
                F(r.means.identical), F(r.means.similar), F(r.means.sca),
                F(r.means.ned), F(r.means.ed)},
               format);
    }
  }
}

namespace {
constexpr std::string_view kPredictionHeader =
    "language_pair_id\tconcept_id\tform_a_id\tform_b_id\tcategory\tsca";
}  // namespace

void WritePredictions(std::ostream& os,
                      const std::vector<FormPairPrediction>& predictions) {
  os << kPredictionHeader << '\n';
  for (const FormPairPrediction& p : predictions) {
    os << p.pair_id << '\t' << p.concept_id << '\t' << p.form_a_id << '\t'
       << p.form_b_id << '\t' << CategoryName(p.category) << '\t'
       << text::Fixed(p.sca, 4) << '\n';
  }
}

std::vector<FormPairPrediction> ParsePredictions(std::string_view content,
                                                 std::string_view source) {
  std::vector<FormPairPrediction> out;
  bool header_seen = false;
  std::vector<std::string_view> lines = text::Lines(text::StripBom(content));
  for (std::size_t n = 0; n < lines.size(); ++n) {
    std::string_view line = text::Trim(lines[n]);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = std::string(source) + ":" + std::to_string(n + 1);
    if (!header_seen) {
      if (line.substr(0, 16) != "language_pair_id") {
        throw Error(ErrorCode::kMalformedRow, where + ": missing predictions header");
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> f = text::Split(line, '\t');
    if (f.size() != 5 && f.size() != 6) {
      throw Error(ErrorCode::kMalformedRow, where + ": expected 5 or 6 columns");
    }
    FormPairPrediction p;
    p.pair_id = std::string(f[0]);
    p.concept_id = std::string(f[1]);
    p.form_a_id = std::string(f[2]);
    p.form_b_id = std::string(f[3]);
    try {
      p.category = ParseCategory(text::Trim(f[4]));
    } catch (const Error& e) {
      throw e.WithContext(where);
    }
    if (f.size() == 6) {
      std::optional<double> sca = text::ParseDouble(f[5]);
      if (!sca) throw Error(ErrorCode::kMalformedRow, where + ": bad sca value");
      p.sca = *sca;
    }
    out.push_back(std::move(p));
  }
  if (!header_seen) {
    throw Error(ErrorCode::kMalformedRow, std::string(source) + ": empty predictions file");
  }
  return out;
}

}  // namespace lexvar
