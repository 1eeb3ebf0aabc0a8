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

#include "lexvar/eval.h"

#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "lexvar/error.h"
#include "text.h"

namespace lexvar {

namespace {

// Pair id plus the two form ids in sorted order.
using PairKey = std::tuple<std::string, std::string, std::string>;

PairKey MakeKey(const std::string& pair_id, const std::string& x, const std::string& y) {
  return x <= y ? PairKey{pair_id, x, y} : PairKey{pair_id, y, x};
}

}  // namespace

GoldAnnotations ParseGold(std::string_view content, std::string_view source) {
  GoldAnnotations gold;
  std::set<PairKey> seen;
  bool first = true;
  std::vector<std::string_view> lines = text::Lines(text::StripBom(content));
  for (std::size_t n = 0; n < lines.size(); ++n) {
    std::string_view line = text::Trim(lines[n]);
    if (line.empty() || line.front() == '#') continue;
    const std::string where = std::string(source) + ":" + std::to_string(n + 1);
    std::vector<std::string_view> f = text::Split(line, '\t');
    if (first && f[0] == "language_pair_id") {
      first = false;
      continue;
    }
    first = false;
    if (f.size() != 5) {
      throw Error(ErrorCode::kMalformedRow,
                  where + ": expected language_pair_id, concept_id, form_a_id, "
                          "form_b_id, label");
    }
    for (std::string_view& field : f) field = text::Trim(field);
    for (std::size_t i = 0; i < 4; ++i) {
      if (f[i].empty()) throw Error(ErrorCode::kMalformedRow, where + ": empty field");
    }
    GoldRecord r{std::string(f[0]), std::string(f[1]), std::string(f[2]),
                 std::string(f[3]), GoldLabel::kSame};
    if (f[4] == "same") {
      r.label = GoldLabel::kSame;
    } else if (f[4] == "different") {
      r.label = GoldLabel::kDifferent;
    } else {
      throw Error(ErrorCode::kUnknownLabel, where + ": " + std::string(f[4]));
    }
    if (!seen.insert(MakeKey(r.pair_id, r.form_a_id, r.form_b_id)).second) {
      throw Error(ErrorCode::kDuplicateRecord,
                  where + ": " + r.form_a_id + " / " + r.form_b_id);
    }
    gold.records.push_back(std::move(r));
  }
  if (gold.records.empty()) {
    throw Error(ErrorCode::kMalformedRow, std::string(source) + ": no gold records");
  }
  return gold;
}

GoldAnnotations LoadGold(const std::filesystem::path& path) {
  return ParseGold(text::ReadFile(path), path.string());
}

EvalRow ScoreConfusion(std::string language, const Confusion& c) {
  EvalRow row;
  row.language = std::move(language);
  row.counts = c;
  if (c.tp + c.fp > 0) {
    row.precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  } else {
    row.precision_undefined = true;
  }
  if (c.tp + c.fn > 0) {
    row.recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  } else {
    row.recall_undefined = true;
  }
  const double pr = row.precision + row.recall;
  row.f_score = pr > 0.0 ? 2.0 * row.precision * row.recall / pr : 0.0;
  return row;
}

EvalResult EvaluatePredictions(const std::vector<FormPairPrediction>& predictions,
                               const GoldAnnotations& gold, const EvalOptions& options) {
  std::map<PairKey, PairCategory> predicted;
  for (const FormPairPrediction& p : predictions) {
    predicted.emplace(MakeKey(p.pair_id, p.form_a_id, p.form_b_id), p.category);
  }

  std::map<std::string, Confusion> per_language;
  Confusion pooled;
  for (const GoldRecord& r : gold.records) {
    auto it = predicted.find(MakeKey(r.pair_id, r.form_a_id, r.form_b_id));
    if (it == predicted.end()) {
      throw Error(ErrorCode::kMissingPrediction,
                  r.pair_id + " " + r.concept_id + ": " + r.form_a_id + " / " +
                      r.form_b_id + " was never compared");
    }
    const bool want_same = options.positive == GoldLabel::kSame;
    const bool actual = (r.label == GoldLabel::kSame) == want_same;
    const bool guess = IsSame(it->second) == want_same;
    Confusion& c = per_language[r.pair_id];
    std::size_t& cell = actual ? (guess ? c.tp : c.fn) : (guess ? c.fp : c.tn);
    ++cell;
    std::size_t& pooled_cell =
        actual ? (guess ? pooled.tp : pooled.fn) : (guess ? pooled.fp : pooled.tn);
    ++pooled_cell;
  }

  EvalResult result;
  for (const auto& [language, counts] : per_language) {
    result.rows.push_back(ScoreConfusion(language, counts));
  }
  result.total = ScoreConfusion("TOTAL", pooled);
  return result;
}

void WriteEvalTable(std::ostream& os, const EvalResult& result, int decimals) {
  os << "Language\tPrecision\tRecall\tF-Score\n";
  auto row = [&](const EvalRow& r) {
    os << r.language << '\t' << text::Fixed(r.precision, decimals) << '\t'
       << text::Fixed(r.recall, decimals) << '\t' << text::Fixed(r.f_score, decimals)
       << '\n';
  };
  for (const EvalRow& r : result.rows) row(r);
  row(result.total);
  auto notes = [&](const EvalRow& r) {
    if (r.precision_undefined) {
      os << "# " << r.language << ": precision undefined, no predicted positives\n";
    }
    if (r.recall_undefined) {
      os << "# " << r.language << ": recall undefined, no gold positives\n";
    }
  };
  for (const EvalRow& r : result.rows) notes(r);
  notes(result.total);
}

}  // namespace lexvar
