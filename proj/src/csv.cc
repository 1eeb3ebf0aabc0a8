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

#include "csv.h"

#include <utility>

#include "lexvar/error.h"
#include "text.h"

namespace lexvar::csv {

std::vector<Record> Parse(std::string_view content, std::string_view source) {
  content = text::StripBom(content);
  std::vector<Record> records;
  Record current;
  std::string field;
  std::size_t line = 1;
  current.line = line;
  bool in_quotes = false;
  bool field_started = false;  // anything seen for the current record

  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
  };
  auto end_record = [&] {
    bool blank = current.fields.size() == 1 && current.fields[0].empty();
    if (field_started && !blank) records.push_back(std::move(current));
    current = Record{};
    field_started = false;
  };

  std::size_t quote_line = 0;
  for (std::size_t i = 0; i < content.size(); ++i) {
    char c = content[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < content.size() && content[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        quote_line = line;
        field_started = true;
        break;
      case ',':
        field_started = true;
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_field();
        end_record();
        ++line;
        current.line = line;
        break;
      default:
        field_started = true;
        field.push_back(c);
    }
  }
  if (in_quotes) {
    throw Error(ErrorCode::kMalformedRow,
                std::string(source) + ":" + std::to_string(quote_line) +
                    ": unterminated quoted field");
  }
  if (field_started) {
    end_field();
    end_record();
  }
  return records;
}

Table::Table(std::string_view content, std::string source)
    : source_(std::move(source)) {
  std::vector<Record> records = Parse(content, source_);
  if (records.empty()) {
    throw Error(ErrorCode::kMalformedRow, source_ + ": missing header row");
  }
  const Record& header = records.front();
  width_ = header.fields.size();
  for (std::size_t i = 0; i < header.fields.size(); ++i) {
    columns_.emplace(std::string(text::Trim(header.fields[i])), i);
  }
  rows_.assign(std::make_move_iterator(records.begin() + 1),
               std::make_move_iterator(records.end()));
}

std::size_t Table::Require(std::string_view column) const {
  auto it = columns_.find(column);
  if (it == columns_.end()) {
    throw Error(ErrorCode::kMalformedRow,
                source_ + ":1: missing column " + std::string(column));
  }
  return it->second;
}

std::size_t Table::Find(std::string_view column) const {
  auto it = columns_.find(column);
  return it == columns_.end() ? std::string_view::npos : it->second;
}

std::string_view Table::Get(const Record& row, std::size_t column) const {
  if (row.fields.size() > width_) {
    throw Error(ErrorCode::kMalformedRow,
                source_ + ":" + std::to_string(row.line) + ": expected " +
                    std::to_string(width_) + " fields, got " +
                    std::to_string(row.fields.size()));
  }
  if (column == std::string_view::npos || column >= row.fields.size()) return {};
  return row.fields[column];
}

}  // namespace lexvar::csv
