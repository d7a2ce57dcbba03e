// Copyright 2026 The Baysec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef BAYSEC_ERROR_H_
#define BAYSEC_ERROR_H_

#include <stdexcept>
#include <string>

namespace baysec {

// Machine-readable error codes. The CLI maps these to JSON error objects
// on stderr with exit code 1; library callers can switch on Code().
enum class ErrorCode {
  kEmptyMatrix,
  kNegativeEntry,
  kRowSumViolation,
  kZeroRow,
  kLengthMismatch,
  kIndexOutOfRange,
  kEqualIndices,
  kDimensionMismatch,
  kDegeneratePrior,
  kZeroPriorVulnerability,
  kZeroPriorRisk,
  kSingleSecret,
  kObservableSpaceTooLarge,
  kSecretSpaceTooLarge,
  kGridTooCoarse,
  kInvalidK,
  kSecretSpaceMismatch,
  kInnerDimensionMismatch,
  kInvalidN,
  kNegativeEpsilon,
  kInvalidScale,
  kTooFewSecrets,
  kInvalidDelta,
  kInvalidGrid,
  kInvalidParameters,
  kInvalidDimensions,
  kInvalidSplit,
  kInvalidReference,
  kInsufficientSamples,
  kOracleFailure,
  kInvalidDistribution,
  kSingularDebias,
  kParseError,
  kIoError,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }
  const char* code_name() const { return ErrorCodeName(code_); }

 private:
  ErrorCode code_;
};

}  // namespace baysec

#endif  // BAYSEC_ERROR_H_
