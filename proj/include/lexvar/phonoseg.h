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

#ifndef LEXVAR_PHONOSEG_H_
#define LEXVAR_PHONOSEG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace lexvar {

// A preprocessed transcription: whitespace-split segment tokens with
// morpheme boundaries and (optionally) tones removed. Never empty once it
// has passed through ParseForm.
struct SegmentedForm {
  std::vector<std::string> tokens;
  std::string source_id;

  std::size_t size() const { return tokens.size(); }
  bool empty() const { return tokens.empty(); }
};

inline bool operator==(const SegmentedForm& a, const SegmentedForm& b) {
  return a.tokens == b.tokens;
}

struct PreprocessOptions {
  bool strip_morpheme_boundaries = true;
  bool strip_tones = true;
};

// True iff every code point of `token` is a Chao tone letter (U+02E5..U+02E9),
// a superscript digit one to five, or an ASCII digit 1-5.
bool IsToneToken(std::string_view token);

// Throws Error(kEmptyForm) when nothing is left after preprocessing.
SegmentedForm ParseForm(std::string_view raw, const PreprocessOptions& opts = {},
                        std::string source_id = {});

// Space-joined tokens; ParseForm(JoinForm(f)) == f.
std::string JoinForm(const SegmentedForm& form);

using ClassId = std::uint16_t;

// Class labels are interned as dense ids [0, num_classes()); the unknown
// class is num_classes() and scores 0 against everything.
class SoundClassModel {
 public:
  // Parses the tab-separated `#classes` / `#scores` / `#gap` format.
  // Throws Error(kMalformedModel).
  static SoundClassModel Parse(std::string_view text, std::string name);
  static SoundClassModel Load(const std::filesystem::path& path);
  // The packaged model, compiled into the library.
  static const SoundClassModel& Default();
  // Default() unless LEXVAR_SOUND_CLASS_MODEL names a model file.
  static SoundClassModel FromEnvironment();

  const std::string& name() const { return name_; }
  std::size_t num_classes() const { return labels_.size(); }
  ClassId unknown_class() const { return static_cast<ClassId>(labels_.size()); }
  double gap_penalty() const { return gap_penalty_; }

  // "?" for the unknown class.
  const std::string& label(ClassId id) const;
  // Throws std::out_of_range for labels not in the model.
  ClassId id_of(std::string_view label) const;
  const std::vector<std::string>& labels() const { return labels_; }

  double score(ClassId a, ClassId b) const {
    return scores_[static_cast<std::size_t>(a) * stride_ + b];
  }

  // Longest-prefix lookup; unknown_class() when no prefix matches.
  ClassId ClassOf(std::string_view token) const;

  const std::map<std::string, ClassId, std::less<>>& prefixes() const {
    return class_of_;
  }

 private:
  SoundClassModel() = default;

  std::string name_;
  std::vector<std::string> labels_;
  std::map<std::string, ClassId, std::less<>> class_of_;
  std::size_t max_prefix_bytes_ = 0;
  // (num_classes + 1)^2, unknown row and column are zero.
  std::vector<double> scores_;
  std::size_t stride_ = 0;
  double gap_penalty_ = 0.0;
};

struct ClassSequence {
  std::vector<ClassId> classes;

  std::size_t size() const { return classes.size(); }
};

inline bool operator==(const ClassSequence& a, const ClassSequence& b) {
  return a.classes == b.classes;
}

ClassSequence ToClasses(const SegmentedForm& form, const SoundClassModel& model);

}  // namespace lexvar

#endif  // LEXVAR_PHONOSEG_H_
