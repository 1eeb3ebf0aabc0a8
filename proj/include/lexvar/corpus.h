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

#ifndef LEXVAR_CORPUS_H_
#define LEXVAR_CORPUS_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lexvar/phonoseg.h"

namespace lexvar {

struct Variety {
  std::string id;
  std::string name;
  std::optional<std::string> glottocode;
  std::optional<double> latitude;
  std::optional<double> longitude;
};

// Four lowercase letters or digits followed by four digits.
bool IsValidGlottocode(std::string_view code);

struct FormEntry {
  std::string id;
  std::string variety_id;
  std::string concept_id;  // Concepticon ID
  SegmentedForm form;
};

// Rows skipped while loading; reported, never fatal.
struct LoadLog {
  std::size_t empty_forms = 0;            // empty Segments or nothing left
  std::size_t unmapped_parameters = 0;    // no Concepticon_ID
  std::size_t forms_of_unmapped_parameters = 0;
};

// A wordlist. Immutable once built; all lookups are const.
class Dataset {
 public:
  // Validates references and id uniqueness. Throws Error(kDuplicateId) or
  // Error(kMalformedRow).
  static Dataset Build(std::string id, std::vector<Variety> varieties,
                       std::map<std::string, std::string> concepts,
                       std::vector<FormEntry> forms, LoadLog log = {});

  const std::string& id() const { return id_; }
  const std::vector<Variety>& varieties() const { return varieties_; }
  // Concepticon ID -> gloss.
  const std::map<std::string, std::string>& concepts() const { return concepts_; }
  const std::vector<FormEntry>& forms() const { return forms_; }
  const LoadLog& log() const { return log_; }

  const Variety* FindVariety(std::string_view variety_id) const;
  // Forms of one slot in file order; empty when the slot is unfilled.
  std::vector<const FormEntry*> SlotForms(std::string_view variety_id,
                                          std::string_view concept_id) const;
  // Concepts with at least one form for the variety.
  std::set<std::string> ConceptsOf(std::string_view variety_id) const;
  // Concepts with at least one form in any variety.
  std::set<std::string> FilledConcepts() const;

 private:
  Dataset() = default;

  std::string id_;
  std::vector<Variety> varieties_;
  std::map<std::string, std::string> concepts_;
  std::vector<FormEntry> forms_;
  LoadLog log_;
  std::map<std::string, std::size_t, std::less<>> variety_index_;
  // variety -> concept -> indices into forms_.
  std::map<std::string, std::map<std::string, std::vector<std::size_t>>,
           std::less<>>
      slots_;
};

// Reads forms.csv, languages.csv and parameters.csv from a CLDF-shaped
// directory. The dataset id is the directory name.
Dataset LoadDataset(const std::filesystem::path& dir,
                    const PreprocessOptions& opts = {});

// Mean over varieties of forms / filled concepts. With `varieties`, only
// those varieties count. Throws Error(kEmptyDataset) when nothing counts.
double Synonymy(const Dataset& ds,
                const std::set<std::string>* varieties = nullptr);
// All forms / all filled (variety, concept) slots.
double PooledSynonymy(const Dataset& ds,
                      const std::set<std::string>* varieties = nullptr);

std::set<std::string> ConceptIntersection(const Dataset& a, const Dataset& b);

enum class PairOrigin { kGlottocodeMatch, kManualSelection };

std::string_view OriginName(PairOrigin origin);

struct VarietyPair {
  std::string variety_a;  // id in dataset A
  std::string variety_b;  // id in dataset B
  PairOrigin origin = PairOrigin::kGlottocodeMatch;

  // "<variety_a>/<variety_b>", the language pair id used in gold files.
  std::string id() const { return variety_a + "/" + variety_b; }
};

inline bool operator==(const VarietyPair& x, const VarietyPair& y) {
  return x.variety_a == y.variety_a && x.variety_b == y.variety_b &&
         x.origin == y.origin;
}

// Cross product of varieties sharing a glottocode, in (A order, B order).
std::vector<VarietyPair> GlottocodePairs(const Dataset& a, const Dataset& b);

// Tab-separated `a_variety_id<TAB>b_variety_id` rows; '#' comments.
// Throws Error(kUnknownVariety), Error(kMalformedRow), Error(kDuplicateId).
std::vector<VarietyPair> ParseManualPairs(std::string_view text,
                                          const Dataset& a, const Dataset& b,
                                          std::string_view source = "<pairs>");
std::vector<VarietyPair> LoadManualPairs(const std::filesystem::path& path,
                                         const Dataset& a, const Dataset& b);

// variety_id, name, glottocode, latitude, longitude; tab-separated.
void WriteCoordinates(std::ostream& os, const Dataset& ds);

}  // namespace lexvar

#endif  // LEXVAR_CORPUS_H_
