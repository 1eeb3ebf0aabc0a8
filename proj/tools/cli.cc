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

#include "cli.h"

#include <CLI11.hpp>
#include <omp.h>

#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "lexvar/corpus.h"
#include "lexvar/eval.h"
#include "lexvar/metrics.h"
#include "lexvar/phonoseg.h"
#include "lexvar/study.h"

namespace lexvar::cli {

ExitStatus ExitStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyForm:
    case ErrorCode::kBothEmpty:
    case ErrorCode::kInvalidParams:
      return kUsageError;
    case ErrorCode::kMalformedModel:
    case ErrorCode::kMissingFile:
    case ErrorCode::kMalformedRow:
    case ErrorCode::kDuplicateId:
    case ErrorCode::kUnknownVariety:
    case ErrorCode::kDuplicateRecord:
    case ErrorCode::kUnknownLabel:
    case ErrorCode::kMalformedConfig:
    case ErrorCode::kEmptyDataset:
      return kDataError;
    case ErrorCode::kEmptySlot:
    case ErrorCode::kNoSharedConcepts:
    case ErrorCode::kEmptyGroup:
    case ErrorCode::kMissingPrediction:
      return kStudyError;
  }
  return kDataError;
}

namespace {

struct ModelFlags {
  std::string model;
  std::optional<double> threshold;
};

struct PreprocessFlags {
  bool keep_boundaries = false;
  bool keep_tones = false;

  PreprocessOptions Options() const { return {!keep_boundaries, !keep_tones}; }
};

// --model, then the config's model, then LEXVAR_SOUND_CLASS_MODEL, then the
// packaged default.
std::shared_ptr<const SoundClassModel> ResolveModel(const ModelFlags& flags,
                                                    const StudyConfig* config) {
  if (!flags.model.empty()) {
    return std::make_shared<SoundClassModel>(SoundClassModel::Load(flags.model));
  }
  if (config != nullptr && config->model) {
    return std::make_shared<SoundClassModel>(
        SoundClassModel::Load(config->Resolve(*config->model)));
  }
  return std::make_shared<SoundClassModel>(SoundClassModel::FromEnvironment());
}

DistanceParams MakeParams(const ModelFlags& flags, const StudyConfig* config) {
  DistanceParams params;
  params.threshold = flags.threshold.value_or(config ? config->threshold : 0.5);
  if (!(params.threshold > 0.0 && params.threshold < 1.0)) {
    throw Error(ErrorCode::kInvalidParams,
                "--threshold must lie strictly between 0 and 1");
  }
  params.model = ResolveModel(flags, config);
  return params;
}

void AddModelFlags(CLI::App* cmd, ModelFlags& flags) {
  cmd->add_option("--threshold", flags.threshold,
                  "SCA distance below which differing forms count as similar "
                  "(default 0.5)");
  cmd->add_option("--model", flags.model,
                  "sound-class model file (default: $LEXVAR_SOUND_CLASS_MODEL or "
                  "the packaged model)");
}

bool LooksLikePredictions(const std::string& content) {
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r\xEF\xBB\xBF");
    if (start == std::string::npos || line[start] == '#') continue;
    return line.compare(start, 16, "language_pair_id") == 0;
  }
  return false;
}

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMissingFile, path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFile(const std::filesystem::path& path,
               const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kMissingFile, "cannot write " + path.string());
  body(out);
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Measure concept-translation variation across multilingual wordlists"};
  app.require_subcommand(1);

  // compare
  CLI::App* compare = app.add_subcommand("compare", "run a study described by a config file");
  std::string compare_config;
  std::string compare_mode;
  std::string compare_format = "tsv";
  std::string compare_out = ".";
  std::string compare_predictions;
  int compare_threads = 0;
  bool compare_serial = false;
  ModelFlags compare_model;
  compare->add_option("config", compare_config, "study config file")->required();
  compare->add_option("--mode", compare_mode, "glottocode or manual (overrides the config)")
      ->check(CLI::IsMember({"glottocode", "manual"}));
  compare->add_option("--format", compare_format, "report format")
      ->check(CLI::IsMember({"tsv", "markdown"}));
  compare->add_option("--out", compare_out, "directory for the report files");
  compare->add_option("--predictions", compare_predictions,
                      "also write every categorized form pair to this file");
  compare->add_option("--threads", compare_threads, "worker threads (0: OpenMP default)")
      ->check(CLI::NonNegativeNumber);
  compare->add_flag("--serial", compare_serial, "use the single-threaded reference path");
  AddModelFlags(compare, compare_model);

  // eval
  CLI::App* eval = app.add_subcommand(
      "eval", "score predictions (or a study config) against gold annotations");
  std::string eval_input;
  std::string eval_gold;
  std::string eval_mode;
  std::string eval_positive = "same";
  int eval_decimals = 2;
  ModelFlags eval_model;
  eval->add_option("input", eval_input, "predictions file or study config")->required();
  eval->add_option("gold", eval_gold, "gold annotation file")->required();
  eval->add_option("--mode", eval_mode, "pairing mode when input is a config")
      ->check(CLI::IsMember({"glottocode", "manual"}));
  eval->add_option("--positive", eval_positive, "positive class")
      ->check(CLI::IsMember({"same", "different"}));
  eval->add_option("--decimals", eval_decimals, "decimals in the table")
      ->check(CLI::Range(0, 6));
  AddModelFlags(eval, eval_model);

  // stats
  CLI::App* stats = app.add_subcommand("stats", "print wordlist statistics");
  std::string stats_dir;
  std::string stats_coordinates;
  PreprocessFlags stats_pre;
  stats->add_option("dataset", stats_dir, "CLDF-shaped dataset directory")->required();
  stats->add_option("--coordinates", stats_coordinates,
                    "write the coordinate export to this file ('-' for stdout)");
  stats->add_flag("--keep-boundaries", stats_pre.keep_boundaries, "keep '+' tokens");
  stats->add_flag("--keep-tones", stats_pre.keep_tones, "keep tone tokens");

  // pairs
  CLI::App* pairs = app.add_subcommand("pairs", "list the variety pairs a study compares");
  std::string pairs_config;
  std::string pairs_mode;
  pairs->add_option("config", pairs_config, "study config file")->required();
  pairs->add_option("--mode", pairs_mode, "glottocode or manual (overrides the config)")
      ->check(CLI::IsMember({"glottocode", "manual"}));

  // dist
  CLI::App* dist = app.add_subcommand("dist", "compare two space-segmented forms");
  std::string dist_a;
  std::string dist_b;
  ModelFlags dist_model;
  PreprocessFlags dist_pre;
  dist->add_option("form_a", dist_a, "first form, e.g. \"v j ã d\"")->required();
  dist->add_option("form_b", dist_b, "second form")->required();
  dist->add_flag("--keep-boundaries", dist_pre.keep_boundaries, "keep '+' tokens");
  dist->add_flag("--keep-tones", dist_pre.keep_tones, "keep tone tokens");
  AddModelFlags(dist, dist_model);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (compare->parsed()) {
      StudyConfig config = LoadStudyConfig(compare_config);
      if (!compare_mode.empty()) config.mode = ParsePairingMode(compare_mode);
      DistanceParams params = MakeParams(compare_model, &config);
      if (compare_threads > 0) omp_set_num_threads(compare_threads);
      StudyOptions options;
      options.serial = compare_serial;
      options.with_predictions = !compare_predictions.empty();
      Report report = RunStudy(config, params, options);

      const TableFormat format =
          compare_format == "markdown" ? TableFormat::kMarkdown : TableFormat::kTsv;
      const std::string ext = format == TableFormat::kMarkdown ? ".md" : ".tsv";
      std::filesystem::path dir(compare_out);
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      WriteFile(dir / ("groups" + ext),
                [&](std::ostream& os) { WriteGroupTable(os, report, format); });
      WriteFile(dir / ("pairs" + ext),
                [&](std::ostream& os) { WritePairTable(os, report, format); });
      if (!compare_predictions.empty()) {
        WriteFile(compare_predictions,
                  [&](std::ostream& os) { WritePredictions(os, report.predictions); });
      }
      for (const GroupReport& g : report.groups) {
        for (const SkippedPair& s : g.skipped) {
          err << "skipped " << g.name << " " << s.pair.id() << ": " << s.reason << '\n';
        }
      }
      out << "Group\tPairs\tIdentical\tSTD\tSimilar\tSTD\tSCA\tSTD\tNED\tSTD\tED\tSTD\n"
          << FormatSummaryRow(report.total, "TOTAL") << '\n';
      return kSuccess;
    }

    if (eval->parsed()) {
      GoldAnnotations gold = LoadGold(eval_gold);
      std::vector<FormPairPrediction> predictions;
      std::string content = Slurp(eval_input);
      if (LooksLikePredictions(content)) {
        predictions = ParsePredictions(content, eval_input);
      } else {
        StudyConfig config = LoadStudyConfig(eval_input);
        if (!eval_mode.empty()) config.mode = ParsePairingMode(eval_mode);
        DistanceParams params = MakeParams(eval_model, &config);
        StudyOptions options;
        options.with_predictions = true;
        predictions = RunStudy(config, params, options).predictions;
      }
      EvalOptions options;
      options.positive = eval_positive == "different" ? GoldLabel::kDifferent
                                                      : GoldLabel::kSame;
      WriteEvalTable(out, EvaluatePredictions(predictions, gold, options), eval_decimals);
      return kSuccess;
    }

    if (stats->parsed()) {
      Dataset ds = LoadDataset(stats_dir, stats_pre.Options());
      out << "dataset\t" << ds.id() << '\n'
          << "varieties\t" << ds.varieties().size() << '\n'
          << "concepts\t" << ds.concepts().size() << '\n'
          << "forms\t" << ds.forms().size() << '\n';
      if (!ds.forms().empty()) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", Synonymy(ds));
        out << "synonymy\t" << buf << '\n';
        std::snprintf(buf, sizeof(buf), "%.2f", PooledSynonymy(ds));
        out << "synonymy_pooled\t" << buf << '\n';
      }
      out << "dropped_empty_forms\t" << ds.log().empty_forms << '\n'
          << "unmapped_parameters\t" << ds.log().unmapped_parameters << '\n'
          << "forms_of_unmapped_parameters\t" << ds.log().forms_of_unmapped_parameters
          << '\n';
      if (stats_coordinates == "-") {
        WriteCoordinates(out, ds);
      } else if (!stats_coordinates.empty()) {
        WriteFile(stats_coordinates, [&](std::ostream& os) { WriteCoordinates(os, ds); });
      }
      return kSuccess;
    }

    if (pairs->parsed()) {
      StudyConfig config = LoadStudyConfig(pairs_config);
      if (!pairs_mode.empty()) config.mode = ParsePairingMode(pairs_mode);
      out << "Group\tPair\tOrigin\n";
      std::size_t total = 0;
      std::vector<std::pair<std::string, std::size_t>> counts;
      for (const GroupConfig& g : config.groups) {
        auto [a, b] = LoadGroupDatasets(config, g);
        std::vector<VarietyPair> found = GroupPairs(config, g, a, b);
        for (const VarietyPair& p : found) {
          out << g.name << '\t' << p.id() << '\t' << OriginName(p.origin) << '\n';
        }
        counts.emplace_back(g.name, found.size());
        total += found.size();
      }
      for (const auto& [name, n] : counts) out << "# pairs\t" << name << '\t' << n << '\n';
      out << "# pairs\tTOTAL\t" << total << '\n';
      return kSuccess;
    }

    if (dist->parsed()) {
      DistanceParams params = MakeParams(dist_model, nullptr);
      SegmentedForm a = ParseForm(dist_a, dist_pre.Options());
      SegmentedForm b = ParseForm(dist_b, dist_pre.Options());
      PairMetrics m = MeasurePair(a, b, params);
      char buf[128];
      std::snprintf(buf, sizeof(buf), "sca=%.2f\ted=%zu\tned=%.2f\tcategory=", m.sca,
                    m.ed, m.ned);
      out << buf << CategoryName(m.category) << '\n';
      return kSuccess;
    }
  } catch (const Error& e) {
    err << "lexvar: " << e.what() << '\n';
    ExitStatus status = ExitStatusFor(e.code());
    if (status == kUsageError) err << app.help();
    return status;
  }
  return kUsageError;
}

}  // namespace lexvar::cli
