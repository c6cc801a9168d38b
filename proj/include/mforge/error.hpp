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

#ifndef MFORGE_ERROR_HPP_
#define MFORGE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mforge {

enum class ErrorCode {
  kNotPrimePower,
  kDivisionByZero,
  kSizeCapExceeded,
  kOverlappingSets,
  kBadRank,
  kNotAFlat,
  kBadParams,
  kBadBasepoint,
  kLemmaViolation,
  kPreconditionViolated,
  kNotAnExtension,
  kRepresentableInput,
  kNoBase,
  kUnknownSuite,
  kSchemaError,
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrimePower: return "NotPrimePower";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kSizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::kOverlappingSets: return "OverlappingSets";
    case ErrorCode::kBadRank: return "BadRank";
    case ErrorCode::kNotAFlat: return "NotAFlat";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kBadBasepoint: return "BadBasepoint";
    case ErrorCode::kLemmaViolation: return "LemmaViolation";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kNotAnExtension: return "NotAnExtension";
    case ErrorCode::kRepresentableInput: return "RepresentableInput";
    case ErrorCode::kNoBase: return "NoBase";
    case ErrorCode::kUnknownSuite: return "UnknownSuite";
    case ErrorCode::kSchemaError: return "SchemaError";
  }
  return "Unknown";
}

// All library failures are reported as Error; code() identifies the kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void Fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace mforge

#endif  // MFORGE_ERROR_HPP_
