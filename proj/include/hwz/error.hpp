// Copyright 2026 The HWZ Authors. All Rights Reserved.
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

#ifndef HWZ_ERROR_HPP_
#define HWZ_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace hwz {

enum class ErrorCode {
  // transform
  kInvalidLength,
  kInvalidShape,
  kLevelTooDeep,
  // thresholding
  kInvalidThreshold,
  kInsufficientCoefficients,
  // metrics
  kShapeMismatch,
  kDegenerateReference,
  // codec
  kMalformedSparse,
  kHeaderMismatch,
  kBadMagic,
  kUnsupportedVersion,
  kTruncatedPayload,
  // rate control
  kInvalidTarget,
  // image i/o
  kBadFormat,
  kUnsupportedMaxval,
  kTruncatedFile,
  kIoFailure,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidLength: return "InvalidLength";
    case ErrorCode::kInvalidShape: return "InvalidShape";
    case ErrorCode::kLevelTooDeep: return "LevelTooDeep";
    case ErrorCode::kInvalidThreshold: return "InvalidThreshold";
    case ErrorCode::kInsufficientCoefficients: return "InsufficientCoefficients";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kDegenerateReference: return "DegenerateReference";
    case ErrorCode::kMalformedSparse: return "MalformedSparse";
    case ErrorCode::kHeaderMismatch: return "HeaderMismatch";
    case ErrorCode::kBadMagic: return "BadMagic";
    case ErrorCode::kUnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::kTruncatedPayload: return "TruncatedPayload";
    case ErrorCode::kInvalidTarget: return "InvalidTarget";
    case ErrorCode::kBadFormat: return "BadFormat";
    case ErrorCode::kUnsupportedMaxval: return "UnsupportedMaxval";
    case ErrorCode::kTruncatedFile: return "TruncatedFile";
    case ErrorCode::kIoFailure: return "IoFailure";
  }
  return "UnknownError";
}

}  // namespace hwz

#endif  // HWZ_ERROR_HPP_
