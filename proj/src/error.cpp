// Copyright 2026 The Authors.
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

#include "antimatroid/error.hpp"

namespace antimatroid {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kGroundSetMismatch: return "GroundSetMismatch";
    case ErrorCode::kNotFeasible: return "NotFeasible";
    case ErrorCode::kNotUnionClosed: return "NotUnionClosed";
    case ErrorCode::kNoFeasibleSubset: return "NoFeasibleSubset";
    case ErrorCode::kInvalidTruncationLevel: return "InvalidTruncationLevel";
    case ErrorCode::kNotTruncatedAntimatroid: return "NotTruncatedAntimatroid";
    case ErrorCode::kEmptyContinuationSet: return "EmptyContinuationSet";
    case ErrorCode::kMissingValue: return "MissingValue";
    case ErrorCode::kNotInDomain: return "NotInDomain";
    case ErrorCode::kEmptyFamily: return "EmptyFamily";
    case ErrorCode::kEmptyInterval: return "EmptyInterval";
    case ErrorCode::kNotARepresentation: return "NotARepresentation";
    case ErrorCode::kNoViolation: return "NoViolation";
    case ErrorCode::kGuardrailExceeded: return "GuardrailExceeded";
    case ErrorCode::kConsistencyViolation: return "ConsistencyViolation";
  }
  return "Unknown";
}

}  // namespace antimatroid
