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

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <utility>

#include "lexvar/corpus.h"
#include "lexvar/error.h"
#include "oracles.h"

namespace lexvar {
namespace {

struct Row {
  const char* variety;
  const char* concept_id;
  const char* segments;
};

Dataset Make(const std::string& id,
             std::vector<std::pair<std::string, std::optional<std::string>>> varieties,
             const std::vector<Row>& rows) {
  std::vector<Variety> vs;
  for (auto& [vid, code] : varieties) vs.push_back(Variety{vid, vid, code, {}, {}});
  std::map<std::string, std::string> concepts;
  std::vector<FormEntry> forms;
  for (const Row& r : rows) {
    concepts.emplace(r.concept_id, std::string("gloss-") + r.concept_id);
    forms.push_back(FormEntry{id + "-" + std::to_string(forms.size()), r.variety, r.concept_id,
                              ParseForm(r.segments)});
  }
  return Dataset::Build(id, std::move(vs), std::move(concepts), std::move(forms));
}

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kEmptyForm;
}

void WriteCsvDataset(const testing::TempDir& dir, const std::string& forms) {
  dir.Write("ds/languages.csv", "ID,Name,Glottocode,Latitude,Longitude\nv1,One,abcd1234,,\n");
  dir.Write("ds/parameters.csv", "ID,Name,Concepticon_ID\np1,A,1\np2,B,2\n");
  dir.Write("ds/forms.csv", forms);
}

TEST(LoadDatasetTest, TinyFixture) {
  Dataset ds = LoadDataset(testing::DataDir() / "tiny_a");
  EXPECT_EQ(ds.id(), "tiny_a");
  EXPECT_EQ(ds.forms().size(), 10u);
  EXPECT_EQ(ds.varieties().size(), 2u);
  EXPECT_EQ(ds.concepts().size(), 5u);
  EXPECT_EQ(ds.concepts().at("634"), "MEAT");
  const Variety* fra = ds.FindVariety("fra");
  ASSERT_NE(fra, nullptr);
  EXPECT_EQ(fra->glottocode, "stan1290");
  EXPECT_EQ(fra->latitude, 48.0);
  const Variety* por = ds.FindVariety("por");
  ASSERT_NE(por, nullptr);
  EXPECT_FALSE(por->latitude.has_value());
  // The quoted parameter id with a comma resolves to its concept.
  auto sun = ds.SlotForms("por", "1343");
  ASSERT_EQ(sun.size(), 1u);
  EXPECT_EQ(JoinForm(sun[0]->form), "s ɔ ɫ");
  EXPECT_EQ(ds.log().empty_forms, 0u);
  EXPECT_EQ(ds.log().unmapped_parameters, 0u);
}

TEST(LoadDatasetTest, Deterministic) {
  Dataset a = LoadDataset(testing::DataDir() / "minicorpus" / "romance_b");
  Dataset b = LoadDataset(testing::DataDir() / "minicorpus" / "romance_b");
  ASSERT_EQ(a.forms().size(), b.forms().size());
  for (std::size_t i = 0; i < a.forms().size(); ++i) {
    EXPECT_EQ(a.forms()[i].id, b.forms()[i].id);
    EXPECT_EQ(a.forms()[i].form, b.forms()[i].form);
  }
  EXPECT_EQ(a.log().unmapped_parameters, b.log().unmapped_parameters);
  EXPECT_EQ(a.log().unmapped_parameters, 1u);
  EXPECT_EQ(a.log().forms_of_unmapped_parameters, 1u);
}

TEST(LoadDatasetTest, MissingParameters) {
  testing::TempDir dir("corpus");
  WriteCsvDataset(dir, "ID,Language_ID,Parameter_ID,Form,Segments\n");
  std::filesystem::remove(dir.path() / "ds" / "parameters.csv");
  EXPECT_EQ(CodeOf([&] { LoadDataset(dir.path() / "ds"); }), ErrorCode::kMissingFile);
  EXPECT_EQ(CodeOf([&] { LoadDataset(dir.path() / "nowhere"); }), ErrorCode::kMissingFile);
}

TEST(LoadDatasetTest, BoundaryOnlyFormDropped) {
  testing::TempDir dir("corpus");
  WriteCsvDataset(dir,
                  "ID,Language_ID,Parameter_ID,Form,Segments\n"
                  "f1,v1,p1,ta,t a\n"
                  "f2,v1,p2,-,+\n"
                  "f3,v1,p2,,\n");
  Dataset ds = LoadDataset(dir.path() / "ds");
  EXPECT_EQ(ds.forms().size(), 1u);
  EXPECT_EQ(ds.log().empty_forms, 2u);

  WriteCsvDataset(dir,
                  "ID,Language_ID,Parameter_ID,Form,Segments\n"
                  "f1,v1,p1,ta,t a\n"
                  "f2,v1,p2,-,+\n");
  EXPECT_EQ(LoadDataset(dir.path() / "ds").log().empty_forms, 1u);
}

TEST(LoadDatasetTest, MalformedRows) {
  testing::TempDir dir("corpus");
  WriteCsvDataset(dir,
                  "ID,Language_ID,Parameter_ID,Form,Segments\n"
                  "f1,v9,p1,ta,t a\n");
  EXPECT_EQ(CodeOf([&] { LoadDataset(dir.path() / "ds"); }), ErrorCode::kMalformedRow);

  WriteCsvDataset(dir,
                  "ID,Language_ID,Parameter_ID,Form,Segments\n"
                  "f1,v1,p1,ta,t a,extra\n");
  EXPECT_EQ(CodeOf([&] { LoadDataset(dir.path() / "ds"); }), ErrorCode::kMalformedRow);

  WriteCsvDataset(dir, "ID,Language_ID,Form\nf1,v1,ta\n");
  EXPECT_EQ(CodeOf([&] { LoadDataset(dir.path() / "ds"); }), ErrorCode::kMalformedRow);

  WriteCsvDataset(dir, "ID,Language_ID,Parameter_ID,Form,Segments\n");
  dir.Write("ds/languages.csv", "ID,Name,Glottocode,Latitude,Longitude\nv1,One,ABCD1234,,\n");
  EXPECT_EQ(CodeOf([&] { LoadDataset(dir.path() / "ds"); }), ErrorCode::kMalformedRow);

  dir.Write("ds/languages.csv", "ID,Name,Glottocode,Latitude,Longitude\nv1,One,,north,\n");
  EXPECT_EQ(CodeOf([&] { LoadDataset(dir.path() / "ds"); }), ErrorCode::kMalformedRow);
}

TEST(LoadDatasetTest, DuplicateIds) {
  testing::TempDir dir("corpus");
  WriteCsvDataset(dir,
                  "ID,Language_ID,Parameter_ID,Form,Segments\n"
                  "f1,v1,p1,ta,t a\n"
                  "f1,v1,p2,ka,k a\n");
  EXPECT_EQ(CodeOf([&] { LoadDataset(dir.path() / "ds"); }), ErrorCode::kDuplicateId);

  WriteCsvDataset(dir, "ID,Language_ID,Parameter_ID,Form,Segments\n");
  dir.Write("ds/languages.csv", "ID,Name,Glottocode,Latitude,Longitude\nv1,A,,,\nv1,B,,,\n");
  EXPECT_EQ(CodeOf([&] { LoadDataset(dir.path() / "ds"); }), ErrorCode::kDuplicateId);
}

TEST(LoadDatasetTest, CrlfAndBom) {
  testing::TempDir dir("corpus");
  WriteCsvDataset(dir,
                  "\xEF\xBB\xBFID,Language_ID,Parameter_ID,Form,Segments\r\n"
                  "f1,v1,p1,ta,t a\r\n");
  Dataset ds = LoadDataset(dir.path() / "ds");
  ASSERT_EQ(ds.forms().size(), 1u);
  EXPECT_EQ(ds.forms()[0].form.tokens, (std::vector<std::string>{"t", "a"}));
}

TEST(GlottocodeTest, Pattern) {
  EXPECT_TRUE(IsValidGlottocode("stan1290"));
  EXPECT_TRUE(IsValidGlottocode("a1b21234"));
  EXPECT_FALSE(IsValidGlottocode("Stan1290"));
  EXPECT_FALSE(IsValidGlottocode("stan129"));
  EXPECT_FALSE(IsValidGlottocode("stan12901"));
  EXPECT_FALSE(IsValidGlottocode("stanabcd"));
}

TEST(DatasetBuildTest, ReferenceChecks) {
  EXPECT_EQ(CodeOf([] { Make("x", {{"v1", std::nullopt}}, {{"v2", "1", "a"}}); }),
            ErrorCode::kMalformedRow);
  EXPECT_EQ(CodeOf([] {
              Dataset::Build("x", {Variety{"v1", "v1", {}, {}, {}}}, {},
                             {FormEntry{"f", "v1", "1", ParseForm("a")}});
            }),
            ErrorCode::kMalformedRow);
  EXPECT_EQ(CodeOf([] {
              Dataset::Build("x", {Variety{"v1", "v1", {}, {}, {}}}, {{"1", "x"}},
                             {FormEntry{"f", "v1", "1", SegmentedForm{}}});
            }),
            ErrorCode::kEmptyForm);
}

TEST(SynonymyTest, Examples) {
  std::vector<Row> rows;
  const char* concepts[] = {"1", "2", "3", "4", "5", "6", "7", "8"};
  for (const char* c : concepts) rows.push_back({"v", c, "t a"});
  rows.push_back({"v", "1", "k a"});
  rows.push_back({"v", "2", "k a"});
  EXPECT_DOUBLE_EQ(Synonymy(Make("s", {{"v", std::nullopt}}, rows)), 1.25);

  EXPECT_DOUBLE_EQ(Synonymy(LoadDataset(testing::DataDir() / "tiny_a")), 1.0);

  // v1: 12 forms over 10 concepts, v2: 7 forms over 5 concepts.
  std::vector<Row> two;
  const char* ten[] = {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10"};
  for (const char* c : ten) two.push_back({"v1", c, "t a"});
  two.push_back({"v1", "1", "k a"});
  two.push_back({"v1", "2", "k a"});
  for (int i = 0; i < 5; ++i) two.push_back({"v2", ten[i], "t a"});
  two.push_back({"v2", "1", "k a"});
  two.push_back({"v2", "2", "k a"});
  Dataset ds = Make("s", {{"v1", std::nullopt}, {"v2", std::nullopt}}, two);
  EXPECT_DOUBLE_EQ(Synonymy(ds), 1.3);
  EXPECT_DOUBLE_EQ(PooledSynonymy(ds), 19.0 / 15.0);
  const std::set<std::string> only_v2{"v2"};
  EXPECT_DOUBLE_EQ(Synonymy(ds, &only_v2), 1.4);
  EXPECT_DOUBLE_EQ(PooledSynonymy(ds, &only_v2), 1.4);
}

TEST(SynonymyTest, EmptyDataset) {
  Dataset empty = Make("e", {{"v", std::nullopt}}, {});
  EXPECT_EQ(CodeOf([&] { Synonymy(empty); }), ErrorCode::kEmptyDataset);
  EXPECT_EQ(CodeOf([&] { PooledSynonymy(empty); }), ErrorCode::kEmptyDataset);
  Dataset one = Make("e", {{"v", std::nullopt}}, {{"v", "1", "a"}});
  const std::set<std::string> none{"w"};
  EXPECT_EQ(CodeOf([&] { Synonymy(one, &none); }), ErrorCode::kEmptyDataset);
}

TEST(SynonymyTest, AtLeastOne) {
  std::mt19937 rng(17);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<Row> rows;
    static const char* cs[] = {"1", "2", "3", "4"};
    static const char* vs[] = {"v1", "v2", "v3"};
    std::uniform_int_distribution<int> n(1, 12);
    for (int i = 0, k = n(rng); i < k; ++i) rows.push_back({vs[rng() % 3], cs[rng() % 4], "a"});
    Dataset ds = Make("r", {{"v1", {}}, {"v2", {}}, {"v3", {}}}, rows);
    EXPECT_GE(Synonymy(ds), 1.0);
    EXPECT_GE(PooledSynonymy(ds), 1.0);
  }
}

TEST(ConceptIntersectionTest, Examples) {
  Dataset a = Make("a", {{"v", {}}}, {{"v", "1", "a"}, {"v", "2", "a"}});
  Dataset b = Make("b", {{"w", {}}}, {{"w", "3", "a"}});
  EXPECT_TRUE(ConceptIntersection(a, b).empty());

  std::vector<Row> rows;
  std::vector<std::string> ids;
  for (int i = 0; i < 94; ++i) ids.push_back(std::to_string(1000 + i));
  for (const std::string& id : ids) rows.push_back({"v", id.c_str(), "t a"});
  Dataset c = Make("c", {{"v", {}}}, rows);
  Dataset d = Make("d", {{"v", {}}}, rows);
  EXPECT_EQ(ConceptIntersection(c, d).size(), 94u);

  Dataset ta = LoadDataset(testing::DataDir() / "tiny_a");
  Dataset tb = LoadDataset(testing::DataDir() / "tiny_b");
  EXPECT_EQ(ConceptIntersection(ta, tb), (std::set<std::string>{"1202", "634"}));
}

TEST(ConceptIntersectionTest, IgnoresConceptsWithoutForms) {
  Dataset a = Dataset::Build("a", {Variety{"v", "v", {}, {}, {}}}, {{"1", "x"}, {"2", "y"}},
                             {FormEntry{"f", "v", "1", ParseForm("a")}});
  Dataset b = Make("b", {{"w", {}}}, {{"w", "1", "a"}, {"w", "2", "a"}});
  EXPECT_EQ(ConceptIntersection(a, b), (std::set<std::string>{"1"}));
}

TEST(GlottocodePairsTest, CrossProduct) {
  Dataset a = Make("a", {{"a1", "xxxx1234"}, {"a2", "xxxx1234"}, {"a3", std::nullopt}}, {});
  Dataset b = Make("b", {{"b1", "xxxx1234"}, {"b2", "yyyy1234"}, {"b3", std::nullopt}}, {});
  auto pairs = GlottocodePairs(a, b);
  ASSERT_EQ(pairs.size(), 2u);
  EXPECT_EQ(pairs[0].variety_a, "a1");
  EXPECT_EQ(pairs[1].variety_a, "a2");
  EXPECT_EQ(pairs[0].variety_b, "b1");
  EXPECT_EQ(pairs[0].origin, PairOrigin::kGlottocodeMatch);
  EXPECT_EQ(pairs[0].id(), "a1/b1");

  Dataset c = Make("c", {{"c1", "zzzz1234"}}, {});
  EXPECT_TRUE(GlottocodePairs(a, c).empty());
}

TEST(GlottocodePairsTest, SymmetricUnderSwap) {
  std::mt19937 rng(23);
  const char* codes[] = {"aaaa1111", "bbbb2222", "cccc3333"};
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<std::pair<std::string, std::optional<std::string>>> va, vb;
    for (int i = 0; i < 5; ++i) {
      auto pick = [&]() -> std::optional<std::string> {
        int r = static_cast<int>(rng() % 4);
        if (r == 3) return std::nullopt;
        return codes[r];
      };
      va.emplace_back("a" + std::to_string(i), pick());
      vb.emplace_back("b" + std::to_string(i), pick());
    }
    Dataset a = Make("a", va, {});
    Dataset b = Make("b", vb, {});
    std::set<std::pair<std::string, std::string>> ab, ba;
    for (const auto& p : GlottocodePairs(a, b)) ab.emplace(p.variety_a, p.variety_b);
    for (const auto& p : GlottocodePairs(b, a)) ba.emplace(p.variety_b, p.variety_a);
    EXPECT_EQ(ab, ba);
    // Brute-force count.
    std::size_t expected = 0;
    for (const auto& x : va) {
      for (const auto& y : vb) expected += x.second && x.second == y.second;
    }
    EXPECT_EQ(ab.size(), expected);
  }
}

TEST(ManualPairsTest, FifteenRows) {
  std::vector<std::pair<std::string, std::optional<std::string>>> va, vb;
  std::string text = "# a\tb\n";
  for (int i = 0; i < 15; ++i) {
    va.emplace_back("ie" + std::to_string(i), std::nullopt);
    vb.emplace_back("IE_" + std::to_string(i), std::nullopt);
    text += "ie" + std::to_string(i) + "\tIE_" + std::to_string(i) + "\n";
  }
  Dataset a = Make("a", va, {});
  Dataset b = Make("b", vb, {});
  auto pairs = ParseManualPairs(text, a, b);
  ASSERT_EQ(pairs.size(), 15u);
  for (const auto& p : pairs) {
    EXPECT_EQ(p.origin, PairOrigin::kManualSelection);
    EXPECT_NE(a.FindVariety(p.variety_a), nullptr);
    EXPECT_NE(b.FindVariety(p.variety_b), nullptr);
  }
}

TEST(ManualPairsTest, Errors) {
  Dataset a = Make("a", {{"x", {}}}, {});
  Dataset b = Make("b", {{"y", {}}}, {});
  EXPECT_EQ(CodeOf([&] { ParseManualPairs("x\tz\n", a, b); }), ErrorCode::kUnknownVariety);
  EXPECT_EQ(CodeOf([&] { ParseManualPairs("y\tx\n", a, b); }), ErrorCode::kUnknownVariety);
  EXPECT_EQ(CodeOf([&] { ParseManualPairs("x y\n", a, b); }), ErrorCode::kMalformedRow);
  EXPECT_EQ(CodeOf([&] { ParseManualPairs("x\ty\tz\n", a, b); }), ErrorCode::kMalformedRow);
  EXPECT_EQ(CodeOf([&] { ParseManualPairs("x\ty\nx\ty\n", a, b); }), ErrorCode::kDuplicateId);
  EXPECT_EQ(CodeOf([&] { LoadManualPairs("/nonexistent.pairs", a, b); }),
            ErrorCode::kMissingFile);
  try {
    ParseManualPairs("\n# c\nx\tq\n", a, b, "p.tsv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("p.tsv:3"), std::string::npos) << e.what();
  }
}

TEST(ManualPairsTest, MinicorpusFiles) {
  auto root = testing::DataDir() / "minicorpus";
  Dataset ra = LoadDataset(root / "romance_a");
  Dataset rb = LoadDataset(root / "romance_b");
  auto pairs = LoadManualPairs(root / "romance.pairs", ra, rb);
  EXPECT_EQ(pairs.size(), 2u);
}

TEST(CoordinatesTest, Output) {
  std::ostringstream os;
  WriteCoordinates(os, LoadDataset(testing::DataDir() / "tiny_a"));
  EXPECT_EQ(os.str(),
            "variety_id\tname\tglottocode\tlatitude\tlongitude\n"
            "fra\tFrench\tstan1290\t48\t2\n"
            "por\tPortuguese\tport1283\t\t\n");
  std::ostringstream again;
  WriteCoordinates(again, LoadDataset(testing::DataDir() / "tiny_a"));
  EXPECT_EQ(os.str(), again.str());
}

}  // namespace
}  // namespace lexvar
