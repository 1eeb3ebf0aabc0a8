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

// Minimal RFC 4180 reader for the CLDF tables.

#ifndef LEXVAR_SRC_CSV_H_
#define LEXVAR_SRC_CSV_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace lexvar::csv {

struct Record {
  std::size_t line = 0;  // 1-based line the record starts on
  std::vector<std::string> fields;
};

// Quoted fields may contain commas, doubled quotes and newlines. Blank
// lines are skipped. Throws Error(kMalformedRow) on an unterminated quote.
std::vector<Record> Parse(std::string_view content, std::string_view source);

// A parsed file whose first record is the header.
class Table {
 public:
  Table(std::string_view content, std::string source);

  const std::string& source() const { return source_; }
  const std::vector<Record>& rows() const { return rows_; }

  // Column index; throws Error(kMalformedRow) naming the missing column.
  std::size_t Require(std::string_view column) const;
  // Column index, or npos when absent.
  std::size_t Find(std::string_view column) const;

  // Field or "" when the row is short. Throws Error(kMalformedRow) when the
  // row is longer than the header.
  std::string_view Get(const Record& row, std::size_t column) const;

 private:
  std::string source_;
  std::map<std::string, std::size_t, std::less<>> columns_;
  std::size_t width_ = 0;
  std::vector<Record> rows_;
};

}  // namespace lexvar::csv

#endif  // LEXVAR_SRC_CSV_H_
