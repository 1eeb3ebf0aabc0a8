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

#include "lexvar/error.h"

namespace lexvar {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyForm: return "EmptyForm";
    case ErrorCode::kBothEmpty: return "BothEmpty";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kMalformedModel: return "MalformedModel";
    case ErrorCode::kMissingFile: return "MissingFile";
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kUnknownVariety: return "UnknownVariety";
    case ErrorCode::kDuplicateRecord: return "DuplicateRecord";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kMalformedConfig: return "MalformedConfig";
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
    case ErrorCode::kEmptySlot: return "EmptySlot";
    case ErrorCode::kNoSharedConcepts: return "NoSharedConcepts";
    case ErrorCode::kEmptyGroup: return "EmptyGroup";
    case ErrorCode::kMissingPrediction: return "MissingPrediction";
  }
  return "Error";
}

}  // namespace lexvar
