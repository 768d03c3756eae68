// Copyright 2026 The qsample Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsample/error.h"

namespace qsample {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotInvertible: return "NotInvertible";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kModulusMismatch: return "ModulusMismatch";
    case ErrorCode::kRankDeficient: return "RankDeficient";
    case ErrorCode::kInconsistentSystem: return "InconsistentSystem";
    case ErrorCode::kNonPrimeModulus: return "NonPrimeModulus";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kDuplicateBasisVector: return "DuplicateBasisVector";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNormTooLarge: return "NormTooLarge";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
    case ErrorCode::kDegenerateBasis: return "DegenerateBasis";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace qsample
