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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "lexvar/error.h"
#include "lexvar/eval.h"
#include "oracles.h"

namespace lexvar {
namespace {

ErrorCode GoldError(std::string_view text) {
  try {
    ParseGold(text, "gold");
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted:\n" << text;
  return ErrorCode::kEmptyForm;
}

FormPairPrediction Pred(std::string pair, std::string a, std::string b, PairCategory c) {
  return FormPairPrediction{std::move(pair), "1", std::move(a), std::move(b), c, 0.0};
}

GoldRecord Gold(std::string pair, std::string a, std::string b, GoldLabel l) {
  return GoldRecord{std::move(pair), "1", std::move(a), std::move(b), l};
}

TEST(GoldTest, FixtureFile) {
  GoldAnnotations g = LoadGold(testing::DataDir() / "eval" / "gold.tsv");
  ASSERT_EQ(g.records.size(), 3u);
  EXPECT_EQ(g.records[2].form_b_id, "b3");
  EXPECT_EQ(g.records[2].label, GoldLabel::kDifferent);
}

TEST(GoldTest, Errors) {
  EXPECT_EQ(GoldError("p\t1\ta\tb\tmaybe\n"), ErrorCode::kUnknownLabel);
  EXPECT_EQ(GoldError("p\t1\ta\tb\tsame\np\t1\ta\tb\tdifferent\n"), ErrorCode::kDuplicateRecord);
  // Reversed form order is the same record.
  EXPECT_EQ(GoldError("p\t1\ta\tb\tsame\np\t1\tb\ta\tsame\n"), ErrorCode::kDuplicateRecord);
  EXPECT_EQ(GoldError("p\t1\ta\tsame\n"), ErrorCode::kMalformedRow);
  EXPECT_EQ(GoldError("# nothing\n"), ErrorCode::kMalformedRow);
  EXPECT_EQ(GoldError(""), ErrorCode::kMalformedRow);
  try {
    LoadGold("/nonexistent/gold.tsv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingFile);
  }
}

TEST(GoldTest, SamePairsAcrossLanguagesAreDistinct) {
  GoldAnnotations g = ParseGold("p\t1\ta\tb\tsame\nq\t1\ta\tb\tsame\n", "gold");
  EXPECT_EQ(g.records.size(), 2u);
}

TEST(ScoreConfusionTest, Arithmetic) {
  EvalRow r = ScoreConfusion("x", Confusion{8, 1, 2, 0});
  EXPECT_NEAR(r.precision, 8.0 / 9.0, 1e-15);
  EXPECT_NEAR(r.recall, 0.8, 1e-15);
  EXPECT_NEAR(r.f_score, 16.0 / 19.0, 1e-15);
  std::ostringstream os;
  EvalResult res{{r}, r};
  res.total.language = "TOTAL";
  WriteEvalTable(os, res, 3);
  EXPECT_EQ(os.str(),
            "Language\tPrecision\tRecall\tF-Score\n"
            "x\t0.889\t0.800\t0.842\n"
            "TOTAL\t0.889\t0.800\t0.842\n");
}

TEST(ScoreConfusionTest, ZeroDenominators) {
  EvalRow none = ScoreConfusion("x", Confusion{0, 0, 0, 5});
  EXPECT_EQ(none.precision, 0.0);
  EXPECT_EQ(none.recall, 0.0);
  EXPECT_EQ(none.f_score, 0.0);
  EXPECT_TRUE(none.precision_undefined);
  EXPECT_TRUE(none.recall_undefined);
  EvalRow no_pos_pred = ScoreConfusion("x", Confusion{0, 0, 3, 1});
  EXPECT_TRUE(no_pos_pred.precision_undefined);
  EXPECT_FALSE(no_pos_pred.recall_undefined);
  EXPECT_EQ(no_pos_pred.recall, 0.0);
  EvalResult res{{none}, none};
  std::ostringstream os;
  WriteEvalTable(os, res);
  EXPECT_NE(os.str().find("# x: precision undefined"), std::string::npos) << os.str();
}

TEST(ScoreConfusionTest, HarmonicMeanBounds) {
  std::mt19937 rng(61);
  std::uniform_int_distribution<std::size_t> n(0, 30);
  for (int iter = 0; iter < 5000; ++iter) {
    Confusion c{n(rng), n(rng), n(rng), n(rng)};
    EvalRow r = ScoreConfusion("x", c);
    for (double v : {r.precision, r.recall, r.f_score}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
    if (r.precision > 0 && r.recall > 0) {
      EXPECT_LE(r.f_score, std::max(r.precision, r.recall) + 1e-15);
      EXPECT_GE(r.f_score, std::min(r.precision, r.recall) - 1e-15);
    } else {
      EXPECT_EQ(r.f_score, 0.0);
    }
  }
}

TEST(EvaluateTest, TinyFixtureAgreement) {
  GoldAnnotations g = LoadGold(testing::DataDir() / "eval" / "gold.tsv");
  std::vector<FormPairPrediction> preds{
      {"fra/french", "1202", "1", "b1", PairCategory::kIdentical, 0.0},
      {"fra/french", "634", "2", "b2", PairCategory::kIdentical, 0.0},
      {"fra/french", "634", "2", "b3", PairCategory::kDifferent, 1.0},
  };
  EvalResult r = EvaluatePredictions(preds, g);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_EQ(r.rows[0].language, "fra/french");
  EXPECT_EQ(r.total.precision, 1.0);
  EXPECT_EQ(r.total.recall, 1.0);
  EXPECT_EQ(r.total.f_score, 1.0);
  EXPECT_EQ(r.total.counts.tn, 1u);
}

TEST(EvaluateTest, CountsAndPooling) {
  std::vector<FormPairPrediction> preds;
  GoldAnnotations g;
  // Language p: 8 TP, 1 FP, 2 FN. Language q: 1 TP, 1 TN.
  int k = 0;
  auto add = [&](const std::string& lang, PairCategory c, GoldLabel l) {
    std::string a = "a" + std::to_string(k), b = "b" + std::to_string(k++);
    preds.push_back(Pred(lang, a, b, c));
    g.records.push_back(Gold(lang, a, b, l));
  };
  for (int i = 0; i < 8; ++i) add("p", PairCategory::kSimilar, GoldLabel::kSame);
  add("p", PairCategory::kIdentical, GoldLabel::kDifferent);
  for (int i = 0; i < 2; ++i) add("p", PairCategory::kDifferent, GoldLabel::kSame);
  add("q", PairCategory::kIdentical, GoldLabel::kSame);
  add("q", PairCategory::kDifferent, GoldLabel::kDifferent);
  // A prediction nobody annotated is ignored.
  preds.push_back(Pred("q", "zz", "yy", PairCategory::kSimilar));

  EvalResult r = EvaluatePredictions(preds, g);
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].counts.tp, 8u);
  EXPECT_EQ(r.rows[0].counts.fp, 1u);
  EXPECT_EQ(r.rows[0].counts.fn, 2u);
  EXPECT_EQ(r.total.counts.tp, 9u);
  EXPECT_EQ(r.total.counts.tn, 1u);
  EXPECT_NEAR(r.total.precision, 0.9, 1e-15);
  EXPECT_NEAR(r.total.recall, 9.0 / 11.0, 1e-15);

  EvalResult flipped = EvaluatePredictions(preds, g, EvalOptions{GoldLabel::kDifferent});
  EXPECT_EQ(flipped.total.counts.tp, 1u);
  EXPECT_EQ(flipped.total.counts.fp, 2u);
  EXPECT_EQ(flipped.total.counts.fn, 1u);
  EXPECT_EQ(flipped.total.counts.tn, 9u);
}

TEST(EvaluateTest, MissingPrediction) {
  GoldAnnotations g{{Gold("p", "a", "b", GoldLabel::kSame)}};
  try {
    EvaluatePredictions({Pred("p", "a", "c", PairCategory::kSimilar)}, g);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMissingPrediction);
  }
  // Matching is per language pair.
  EXPECT_THROW(EvaluatePredictions({Pred("q", "a", "b", PairCategory::kSimilar)}, g), Error);
}

TEST(EvaluateTest, GoldOrderSymmetry) {
  std::mt19937 rng(67);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<FormPairPrediction> preds;
    GoldAnnotations g, swapped;
    for (int i = 0; i < 20; ++i) {
      std::string lang = (rng() % 2) ? "p" : "q";
      std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
      preds.push_back(Pred(lang, a, b, static_cast<PairCategory>(rng() % 3)));
      GoldLabel l = (rng() % 2) ? GoldLabel::kSame : GoldLabel::kDifferent;
      g.records.push_back(Gold(lang, a, b, l));
      swapped.records.push_back(Gold(lang, b, a, l));
    }
    EvalResult x = EvaluatePredictions(preds, g);
    EvalResult y = EvaluatePredictions(preds, swapped);
    ASSERT_EQ(x.rows.size(), y.rows.size());
    for (std::size_t i = 0; i < x.rows.size(); ++i) {
      EXPECT_EQ(x.rows[i].language, y.rows[i].language);
      EXPECT_EQ(x.rows[i].f_score, y.rows[i].f_score);
    }
    EXPECT_EQ(x.total.precision, y.total.precision);
    EXPECT_EQ(x.total.recall, y.total.recall);
  }
}

TEST(EvaluateTest, RecallGrowsWithThreshold) {
  std::mt19937 rng(71);
  for (int iter = 0; iter < 30; ++iter) {
    std::vector<std::pair<SegmentedForm, SegmentedForm>> forms;
    GoldAnnotations g;
    for (int i = 0; i < 40; ++i) {
      SegmentedForm a = testing::RandomForm(rng, 5);
      SegmentedForm b = (i % 4 == 0) ? a : testing::RandomForm(rng, 5);
      forms.emplace_back(a, b);
      g.records.push_back(Gold("p", "a" + std::to_string(i), "b" + std::to_string(i),
                               (rng() % 3) ? GoldLabel::kSame : GoldLabel::kDifferent));
    }
    double last = -1.0;
    for (double t : {0.05, 0.2, 0.35, 0.5, 0.65, 0.8, 0.95, 0.999}) {
      DistanceParams p = DistanceParams::Defaults();
      p.threshold = t;
      std::vector<FormPairPrediction> preds;
      for (std::size_t i = 0; i < forms.size(); ++i) {
        preds.push_back(Pred("p", "a" + std::to_string(i), "b" + std::to_string(i),
                             ClassifyPair(forms[i].first, forms[i].second, p)));
      }
      double recall = EvaluatePredictions(preds, g).total.recall;
      EXPECT_GE(recall, last) << t;
      last = recall;
    }
  }
}

TEST(WriteEvalTableTest, Decimals) {
  EvalRow r = ScoreConfusion("p", Confusion{2, 1, 0, 0});
  EvalRow total = r;
  total.language = "TOTAL";
  std::ostringstream two, four;
  WriteEvalTable(two, EvalResult{{r}, total});
  WriteEvalTable(four, EvalResult{{r}, total}, 4);
  EXPECT_EQ(two.str(),
            "Language\tPrecision\tRecall\tF-Score\np\t0.67\t1.00\t0.80\nTOTAL\t0.67\t1.00\t0.80\n");
  EXPECT_NE(four.str().find("p\t0.6667\t1.0000\t0.8000"), std::string::npos);
}

}  // namespace
}  // namespace lexvar
