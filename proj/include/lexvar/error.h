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

#ifndef LEXVAR_ERROR_H_
#define LEXVAR_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace lexvar {

enum class ErrorCode {
  // Input errors.
  kEmptyForm,
  kBothEmpty,
  kInvalidParams,
  // Data errors (files and formats).
  kMalformedModel,
  kMissingFile,
  kMalformedRow,
  kDuplicateId,
  kUnknownVariety,
  kDuplicateRecord,
  kUnknownLabel,
  kMalformedConfig,
  kEmptyDataset,
  // Study errors.
  kEmptySlot,
  kNoSharedConcepts,
  kEmptyGroup,
  kMissingPrediction,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception. The message
// carries file/line or dataset/pair context where one exists.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const { return code_; }
  // The message without the code name.
  const std::string& message() const { return message_; }

  // Same error with `context` prepended, e.g. a dataset or pair name.
  Error WithContext(std::string_view context) const {
    return Error(code_, std::string(context) + ": " + message_);
  }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace lexvar

#endif  // LEXVAR_ERROR_H_
