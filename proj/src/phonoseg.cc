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

#include "lexvar/phonoseg.h"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>

#include "lexvar/error.h"
#include "text.h"

namespace lexvar {

namespace internal {
extern const char kDefaultSoundClassModel[];
}  // namespace internal

namespace {

bool IsToneCodePoint(char32_t cp) {
  if (cp >= 0x02E5 && cp <= 0x02E9) return true;  // Chao letters
  if (cp >= U'1' && cp <= U'5') return true;
  // Superscript one to five.
  return cp == 0x00B9 || cp == 0x00B2 || cp == 0x00B3 || cp == 0x2074 ||
         cp == 0x2075;
}

constexpr std::string_view kUnknownLabel = "?";

}  // namespace

bool IsToneToken(std::string_view token) {
  if (token.empty()) return false;
  std::size_t pos = 0;
  while (pos < token.size()) {
    if (!IsToneCodePoint(text::NextCodePoint(token, pos))) return false;
  }
  return true;
}

SegmentedForm ParseForm(std::string_view raw, const PreprocessOptions& opts,
                        std::string source_id) {
  SegmentedForm form;
  form.source_id = std::move(source_id);
  for (std::string_view token : text::SplitWhitespace(raw)) {
    if (opts.strip_morpheme_boundaries && token == "+") continue;
    if (opts.strip_tones && IsToneToken(token)) continue;
    form.tokens.emplace_back(token);
  }
  if (form.tokens.empty()) {
    throw Error(ErrorCode::kEmptyForm,
                "no segments left in \"" + std::string(raw) + "\"");
  }
  return form;
}

std::string JoinForm(const SegmentedForm& form) {
  std::string out;
  for (const std::string& token : form.tokens) {
    if (!out.empty()) out.push_back(' ');
    out += token;
  }
  return out;
}

// --- SoundClassModel ---------------------------------------------------------

SoundClassModel SoundClassModel::Parse(std::string_view content,
                                       std::string name) {
  auto fail = [&](std::size_t line, const std::string& what) -> Error {
    std::string where = name;
    if (line > 0) where += ":" + std::to_string(line);
    return Error(ErrorCode::kMalformedModel, where + ": " + what);
  };

  enum class Section { kNone, kClasses, kScores, kGap };
  Section section = Section::kNone;
  std::set<Section> seen;

  SoundClassModel model;
  model.name_ = name;
  std::map<std::string, ClassId, std::less<>> label_ids;
  std::vector<std::string> header;
  std::map<std::string, std::vector<std::optional<double>>, std::less<>> rows;
  std::optional<double> gap;

  auto intern = [&](std::string_view label) {
    auto it = label_ids.find(label);
    if (it != label_ids.end()) return it->second;
    ClassId id = static_cast<ClassId>(model.labels_.size());
    model.labels_.emplace_back(label);
    label_ids.emplace(std::string(label), id);
    return id;
  };

  std::vector<std::string_view> lines = text::Lines(text::StripBom(content));
  for (std::size_t n = 0; n < lines.size(); ++n) {
    const std::size_t line_no = n + 1;
    std::string_view line = lines[n];
    std::string_view trimmed = text::Trim(line);
    if (trimmed.empty()) continue;
    if (trimmed == "#classes" || trimmed == "#scores" || trimmed == "#gap") {
      section = trimmed == "#classes"  ? Section::kClasses
                : trimmed == "#scores" ? Section::kScores
                                       : Section::kGap;
      if (!seen.insert(section).second) {
        throw fail(line_no, "repeated section " + std::string(trimmed));
      }
      continue;
    }
    if (trimmed.front() == '#') continue;

    switch (section) {
      case Section::kNone:
        throw fail(line_no, "content before the first section");
      case Section::kClasses: {
        std::vector<std::string_view> fields = text::Split(line, '\t');
        if (fields.size() != 2) throw fail(line_no, "expected prefix<TAB>class");
        std::string_view prefix = text::Trim(fields[0]);
        std::string_view label = text::Trim(fields[1]);
        if (prefix.empty() || label.empty()) throw fail(line_no, "empty field");
        if (label == kUnknownLabel) {
          throw fail(line_no, "class label '?' is reserved");
        }
        if (model.class_of_.count(prefix) != 0) {
          throw fail(line_no, "duplicate prefix " + std::string(prefix));
        }
        model.class_of_.emplace(std::string(prefix), intern(label));
        model.max_prefix_bytes_ = std::max(model.max_prefix_bytes_, prefix.size());
        break;
      }
      case Section::kScores: {
        std::vector<std::string_view> fields = text::Split(line, '\t');
        if (header.empty()) {
          if (!text::Trim(fields[0]).empty() || fields.size() < 2) {
            throw fail(line_no, "score matrix header must start with a tab");
          }
          for (std::size_t i = 1; i < fields.size(); ++i) {
            header.emplace_back(text::Trim(fields[i]));
          }
          break;
        }
        if (fields.size() != header.size() + 1) {
          throw fail(line_no, "score row width does not match the header");
        }
        std::string row_label(text::Trim(fields[0]));
        if (rows.count(row_label) != 0) {
          throw fail(line_no, "duplicate score row " + row_label);
        }
        std::vector<std::optional<double>> values;
        for (std::size_t i = 1; i < fields.size(); ++i) {
          std::optional<double> v = text::ParseDouble(fields[i]);
          if (!v) throw fail(line_no, "bad score " + std::string(fields[i]));
          values.push_back(v);
        }
        rows.emplace(std::move(row_label), std::move(values));
        break;
      }
      case Section::kGap: {
        if (gap) throw fail(line_no, "more than one gap penalty");
        gap = text::ParseDouble(trimmed);
        if (!gap) throw fail(line_no, "bad gap penalty");
        break;
      }
    }
  }

  if (model.labels_.empty()) throw fail(0, "no classes");
  if (header.empty()) throw fail(0, "no score matrix");
  if (!gap) throw fail(0, "no gap penalty");
  if (*gap >= 0.0) throw fail(0, "gap penalty must be negative");
  model.gap_penalty_ = *gap;

  const std::size_t n = model.labels_.size();
  model.stride_ = n + 1;
  model.scores_.assign(model.stride_ * model.stride_, 0.0);
  std::vector<std::optional<ClassId>> column_ids;
  std::set<std::string> header_seen;
  for (const std::string& label : header) {
    auto it = label_ids.find(label);
    if (it == label_ids.end()) throw fail(0, "score column for unknown class " + label);
    if (!header_seen.insert(label).second) throw fail(0, "duplicate score column " + label);
    column_ids.push_back(it->second);
  }
  if (header_seen.size() != n || rows.size() != n) {
    throw fail(0, "score matrix must cover every class exactly once");
  }
  for (const auto& [label, values] : rows) {
    auto it = label_ids.find(label);
    if (it == label_ids.end()) throw fail(0, "score row for unknown class " + label);
    for (std::size_t j = 0; j < values.size(); ++j) {
      model.scores_[it->second * model.stride_ + *column_ids[j]] = *values[j];
    }
  }
  for (ClassId a = 0; a < n; ++a) {
    if (model.score(a, a) <= 0.0) {
      throw fail(0, "self score of " + model.labels_[a] + " must be positive");
    }
    for (ClassId b = a + 1; b < n; ++b) {
      if (model.score(a, b) != model.score(b, a)) {
        throw fail(0, "asymmetric score for " + model.labels_[a] + "/" +
                          model.labels_[b]);
      }
    }
  }
  return model;
}

SoundClassModel SoundClassModel::Load(const std::filesystem::path& path) {
  std::string content;
  try {
    content = text::ReadFile(path);
  } catch (const Error&) {
    throw Error(ErrorCode::kMalformedModel, "cannot read " + path.string());
  }
  return Parse(content, path.stem().string());
}

const SoundClassModel& SoundClassModel::Default() {
  static const SoundClassModel model =
      Parse(internal::kDefaultSoundClassModel, "sca-default");
  return model;
}

SoundClassModel SoundClassModel::FromEnvironment() {
  const char* path = std::getenv("LEXVAR_SOUND_CLASS_MODEL");
  if (path == nullptr || *path == '\0') return Default();
  return Load(path);
}

const std::string& SoundClassModel::label(ClassId id) const {
  static const std::string unknown(kUnknownLabel);
  return id < labels_.size() ? labels_[id] : unknown;
}

ClassId SoundClassModel::id_of(std::string_view label) const {
  if (label == kUnknownLabel) return unknown_class();
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw std::out_of_range("no sound class " + std::string(label));
  }
  return static_cast<ClassId>(it - labels_.begin());
}

ClassId SoundClassModel::ClassOf(std::string_view token) const {
  // Prefixes are cut on code point boundaries so a combining mark never
  // splits a multi-byte sequence.
  std::vector<std::size_t> cuts;
  std::size_t pos = 0;
  while (pos < token.size() && pos < max_prefix_bytes_) {
    text::NextCodePoint(token, pos);
    cuts.push_back(std::min(pos, token.size()));
  }
  for (auto it = cuts.rbegin(); it != cuts.rend(); ++it) {
    if (*it > max_prefix_bytes_) continue;
    auto found = class_of_.find(token.substr(0, *it));
    if (found != class_of_.end()) return found->second;
  }
  return unknown_class();
}

ClassSequence ToClasses(const SegmentedForm& form, const SoundClassModel& model) {
  ClassSequence seq;
  seq.classes.reserve(form.tokens.size());
  for (const std::string& token : form.tokens) {
    seq.classes.push_back(model.ClassOf(token));
  }
  return seq;
}

}  // namespace lexvar
