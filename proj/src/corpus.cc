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

#include "lexvar/corpus.h"

#include <algorithm>
#include <charconv>
#include <utility>

#include "csv.h"
#include "lexvar/error.h"
#include "text.h"

namespace lexvar {

bool IsValidGlottocode(std::string_view code) {
  if (code.size() != 8) return false;
  for (std::size_t i = 0; i < 8; ++i) {
    char c = code[i];
    bool digit = c >= '0' && c <= '9';
    bool lower = c >= 'a' && c <= 'z';
    if (i < 4 ? !(digit || lower) : !digit) return false;
  }
  return true;
}

Dataset Dataset::Build(std::string id, std::vector<Variety> varieties,
                       std::map<std::string, std::string> concepts,
                       std::vector<FormEntry> forms, LoadLog log) {
  Dataset ds;
  ds.id_ = std::move(id);
  ds.varieties_ = std::move(varieties);
  ds.concepts_ = std::move(concepts);
  ds.forms_ = std::move(forms);
  ds.log_ = log;

  for (std::size_t i = 0; i < ds.varieties_.size(); ++i) {
    if (!ds.variety_index_.emplace(ds.varieties_[i].id, i).second) {
      throw Error(ErrorCode::kDuplicateId,
                  ds.id_ + ": variety " + ds.varieties_[i].id);
    }
  }
  std::set<std::string_view> form_ids;
  for (std::size_t i = 0; i < ds.forms_.size(); ++i) {
    const FormEntry& f = ds.forms_[i];
    if (!form_ids.insert(f.id).second) {
      throw Error(ErrorCode::kDuplicateId, ds.id_ + ": form " + f.id);
    }
    if (ds.variety_index_.count(f.variety_id) == 0) {
      throw Error(ErrorCode::kMalformedRow,
                  ds.id_ + ": form " + f.id + " references unknown variety " +
                      f.variety_id);
    }
    if (ds.concepts_.count(f.concept_id) == 0) {
      throw Error(ErrorCode::kMalformedRow,
                  ds.id_ + ": form " + f.id + " references unknown concept " +
                      f.concept_id);
    }
    if (f.form.empty()) {
      throw Error(ErrorCode::kEmptyForm, ds.id_ + ": form " + f.id);
    }
    ds.slots_[f.variety_id][f.concept_id].push_back(i);
  }
  return ds;
}

const Variety* Dataset::FindVariety(std::string_view variety_id) const {
  auto it = variety_index_.find(variety_id);
  return it == variety_index_.end() ? nullptr : &varieties_[it->second];
}

std::vector<const FormEntry*> Dataset::SlotForms(std::string_view variety_id,
                                                 std::string_view concept_id) const {
  std::vector<const FormEntry*> out;
  auto v = slots_.find(variety_id);
  if (v == slots_.end()) return out;
  auto c = v->second.find(std::string(concept_id));
  if (c == v->second.end()) return out;
  for (std::size_t i : c->second) out.push_back(&forms_[i]);
  return out;
}

std::set<std::string> Dataset::ConceptsOf(std::string_view variety_id) const {
  std::set<std::string> out;
  auto v = slots_.find(variety_id);
  if (v == slots_.end()) return out;
  for (const auto& [concept_id, indices] : v->second) out.insert(concept_id);
  return out;
}

std::set<std::string> Dataset::FilledConcepts() const {
  std::set<std::string> out;
  for (const FormEntry& f : forms_) out.insert(f.concept_id);
  return out;
}

namespace {

std::string Where(const csv::Table& table, const csv::Record& row) {
  return table.source() + ":" + std::to_string(row.line);
}

csv::Table ReadTable(const std::filesystem::path& dir, std::string_view name) {
  std::filesystem::path path = dir / name;
  return csv::Table(text::ReadFile(path), path.string());
}

std::optional<double> ParseCoordinate(const csv::Table& table,
                                      const csv::Record& row,
                                      std::size_t column, double limit) {
  std::string_view raw = text::Trim(table.Get(row, column));
  if (raw.empty()) return std::nullopt;
  std::optional<double> v = text::ParseDouble(raw);
  if (!v || *v < -limit || *v > limit) {
    throw Error(ErrorCode::kMalformedRow,
                Where(table, row) + ": bad coordinate " + std::string(raw));
  }
  return v;
}

}  // namespace

Dataset LoadDataset(const std::filesystem::path& dir, const PreprocessOptions& opts) {
  csv::Table languages = ReadTable(dir, "languages.csv");
  csv::Table parameters = ReadTable(dir, "parameters.csv");
  csv::Table form_table = ReadTable(dir, "forms.csv");
  LoadLog log;

  std::vector<Variety> varieties;
  {
    const std::size_t id = languages.Require("ID");
    const std::size_t name = languages.Find("Name");
    const std::size_t glottocode = languages.Find("Glottocode");
    const std::size_t lat = languages.Find("Latitude");
    const std::size_t lon = languages.Find("Longitude");
    for (const csv::Record& row : languages.rows()) {
      Variety v;
      v.id = std::string(text::Trim(languages.Get(row, id)));
      if (v.id.empty()) {
        throw Error(ErrorCode::kMalformedRow, Where(languages, row) + ": empty ID");
      }
      v.name = std::string(text::Trim(languages.Get(row, name)));
      std::string_view code = text::Trim(languages.Get(row, glottocode));
      if (!code.empty()) {
        if (!IsValidGlottocode(code)) {
          throw Error(ErrorCode::kMalformedRow,
                      Where(languages, row) + ": bad glottocode " + std::string(code));
        }
        v.glottocode = std::string(code);
      }
      v.latitude = ParseCoordinate(languages, row, lat, 90.0);
      v.longitude = ParseCoordinate(languages, row, lon, 180.0);
      varieties.push_back(std::move(v));
    }
  }

  // Parameter ID -> Concepticon ID; empty for unmapped parameters.
  std::map<std::string, std::string, std::less<>> parameter_concept;
  std::map<std::string, std::string> concepts;
  {
    const std::size_t id = parameters.Require("ID");
    const std::size_t name = parameters.Find("Name");
    const std::size_t concepticon = parameters.Require("Concepticon_ID");
    for (const csv::Record& row : parameters.rows()) {
      std::string pid(text::Trim(parameters.Get(row, id)));
      if (pid.empty()) {
        throw Error(ErrorCode::kMalformedRow, Where(parameters, row) + ": empty ID");
      }
      std::string cid(text::Trim(parameters.Get(row, concepticon)));
      if (!parameter_concept.emplace(pid, cid).second) {
        throw Error(ErrorCode::kDuplicateId,
                    Where(parameters, row) + ": parameter " + pid);
      }
      if (cid.empty()) {
        ++log.unmapped_parameters;
        continue;
      }
      concepts.emplace(cid, std::string(text::Trim(parameters.Get(row, name))));
    }
  }

  std::set<std::string, std::less<>> variety_ids;
  for (const Variety& v : varieties) variety_ids.insert(v.id);

  std::vector<FormEntry> forms;
  {
    const std::size_t id = form_table.Require("ID");
    const std::size_t language = form_table.Require("Language_ID");
    const std::size_t parameter = form_table.Require("Parameter_ID");
    const std::size_t segments = form_table.Require("Segments");
    for (const csv::Record& row : form_table.rows()) {
      FormEntry entry;
      entry.id = std::string(text::Trim(form_table.Get(row, id)));
      if (entry.id.empty()) {
        throw Error(ErrorCode::kMalformedRow, Where(form_table, row) + ": empty ID");
      }
      entry.variety_id = std::string(text::Trim(form_table.Get(row, language)));
      if (variety_ids.count(entry.variety_id) == 0) {
        throw Error(ErrorCode::kMalformedRow,
                    Where(form_table, row) + ": unknown Language_ID " + entry.variety_id);
      }
      std::string_view pid = text::Trim(form_table.Get(row, parameter));
      auto concept_it = parameter_concept.find(pid);
      if (concept_it == parameter_concept.end()) {
        throw Error(ErrorCode::kMalformedRow,
                    Where(form_table, row) + ": unknown Parameter_ID " + std::string(pid));
      }
      if (concept_it->second.empty()) {
        ++log.forms_of_unmapped_parameters;
        continue;
      }
      entry.concept_id = concept_it->second;
      try {
        entry.form = ParseForm(form_table.Get(row, segments), opts, entry.id);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kEmptyForm) throw;
        ++log.empty_forms;
        continue;
      }
      forms.push_back(std::move(entry));
    }
  }

  std::string ds_id = dir.filename().string();
  if (ds_id.empty()) ds_id = dir.parent_path().filename().string();
  try {
    return Dataset::Build(std::move(ds_id), std::move(varieties), std::move(concepts),
                          std::move(forms), log);
  } catch (const Error& e) {
    throw e.WithContext(dir.string());
  }
}

namespace {

struct SlotCounts {
  std::size_t forms = 0;
  std::size_t slots = 0;
};

// Per counted variety: forms and filled concepts.
std::vector<SlotCounts> CountSlots(const Dataset& ds,
                                   const std::set<std::string>* varieties) {
  std::vector<SlotCounts> out;
  for (const Variety& v : ds.varieties()) {
    if (varieties != nullptr && varieties->count(v.id) == 0) continue;
    SlotCounts counts;
    for (const std::string& concept_id : ds.ConceptsOf(v.id)) {
      counts.forms += ds.SlotForms(v.id, concept_id).size();
      ++counts.slots;
    }
    if (counts.slots > 0) out.push_back(counts);
  }
  if (out.empty()) {
    throw Error(ErrorCode::kEmptyDataset, ds.id() + ": no forms to count");
  }
  return out;
}

}  // namespace

double Synonymy(const Dataset& ds, const std::set<std::string>* varieties) {
  std::vector<SlotCounts> counts = CountSlots(ds, varieties);
  double sum = 0.0;
  for (const SlotCounts& c : counts) {
    sum += static_cast<double>(c.forms) / static_cast<double>(c.slots);
  }
  return sum / static_cast<double>(counts.size());
}

double PooledSynonymy(const Dataset& ds, const std::set<std::string>* varieties) {
  std::size_t forms = 0;
  std::size_t slots = 0;
  for (const SlotCounts& c : CountSlots(ds, varieties)) {
    forms += c.forms;
    slots += c.slots;
  }
  return static_cast<double>(forms) / static_cast<double>(slots);
}

std::set<std::string> ConceptIntersection(const Dataset& a, const Dataset& b) {
  std::set<std::string> ca = a.FilledConcepts();
  std::set<std::string> cb = b.FilledConcepts();
  std::set<std::string> out;
  std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(),
                        std::inserter(out, out.end()));
  return out;
}

std::string_view OriginName(PairOrigin origin) {
  return origin == PairOrigin::kGlottocodeMatch ? "glottocode" : "manual";
}

std::vector<VarietyPair> GlottocodePairs(const Dataset& a, const Dataset& b) {
  std::vector<VarietyPair> out;
  for (const Variety& va : a.varieties()) {
    if (!va.glottocode) continue;
    for (const Variety& vb : b.varieties()) {
      if (vb.glottocode == va.glottocode) {
        out.push_back({va.id, vb.id, PairOrigin::kGlottocodeMatch});
      }
    }
  }
  return out;
}

std::vector<VarietyPair> ParseManualPairs(std::string_view content,
                                          const Dataset& a, const Dataset& b,
                                          std::string_view source) {
  std::vector<VarietyPair> out;
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<std::string_view> lines = text::Lines(text::StripBom(content));
  for (std::size_t n = 0; n < lines.size(); ++n) {
    std::string_view line = lines[n];
    std::string_view trimmed = text::Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const std::string where = std::string(source) + ":" + std::to_string(n + 1);
    std::vector<std::string_view> fields = text::Split(trimmed, '\t');
    if (fields.size() != 2 || text::Trim(fields[0]).empty() ||
        text::Trim(fields[1]).empty()) {
      throw Error(ErrorCode::kMalformedRow,
                  where + ": expected dataset_a_variety_id<TAB>dataset_b_variety_id");
    }
    VarietyPair pair{std::string(text::Trim(fields[0])),
                     std::string(text::Trim(fields[1])), PairOrigin::kManualSelection};
    if (a.FindVariety(pair.variety_a) == nullptr) {
      throw Error(ErrorCode::kUnknownVariety,
                  where + ": " + pair.variety_a + " is not a variety of " + a.id());
    }
    if (b.FindVariety(pair.variety_b) == nullptr) {
      throw Error(ErrorCode::kUnknownVariety,
                  where + ": " + pair.variety_b + " is not a variety of " + b.id());
    }
    if (!seen.emplace(pair.variety_a, pair.variety_b).second) {
      throw Error(ErrorCode::kDuplicateId, where + ": repeated pair " + pair.id());
    }
    out.push_back(std::move(pair));
  }
  return out;
}

std::vector<VarietyPair> LoadManualPairs(const std::filesystem::path& path,
                                         const Dataset& a, const Dataset& b) {
  return ParseManualPairs(text::ReadFile(path), a, b, path.string());
}

namespace {

std::string ShortestDouble(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

}  // namespace

void WriteCoordinates(std::ostream& os, const Dataset& ds) {
  os << "variety_id\tname\tglottocode\tlatitude\tlongitude\n";
  for (const Variety& v : ds.varieties()) {
    os << v.id << '\t' << v.name << '\t' << v.glottocode.value_or("") << '\t'
       << (v.latitude ? ShortestDouble(*v.latitude) : "") << '\t'
       << (v.longitude ? ShortestDouble(*v.longitude) : "") << '\n';
  }
}

}  // namespace lexvar
