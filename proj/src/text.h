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

// Internal string helpers shared by the parsers.

#ifndef LEXVAR_SRC_TEXT_H_
#define LEXVAR_SRC_TEXT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lexvar::text {

inline bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

std::string_view Trim(std::string_view s);

// Splits on runs of ASCII whitespace, dropping empty pieces.
std::vector<std::string_view> SplitWhitespace(std::string_view s);

// Splits on every occurrence of `sep`, keeping empty pieces.
std::vector<std::string_view> Split(std::string_view s, char sep);

// Lines without their terminators ("\n" or "\r\n").
std::vector<std::string_view> Lines(std::string_view s);

// Decodes one UTF-8 code point starting at `pos` and advances `pos`.
// Invalid bytes decode as U+FFFD and consume one byte.
char32_t NextCodePoint(std::string_view s, std::size_t& pos);

std::optional<double> ParseDouble(std::string_view s);
std::optional<bool> ParseBool(std::string_view s);

// printf("%.*f"), with negative zero printed as zero.
std::string Fixed(double value, int decimals);

// Whole file; throws Error(kMissingFile) when unreadable.
std::string ReadFile(const std::filesystem::path& path);

// Strips a leading UTF-8 byte order mark.
std::string_view StripBom(std::string_view s);

}  // namespace lexvar::text

#endif  // LEXVAR_SRC_TEXT_H_
