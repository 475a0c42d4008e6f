/* Copyright 2026 The mcmfcc Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MCMFCC_ERROR_H_
#define MCMFCC_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcmfcc {

enum class ErrorCode {
  kNotFound,
  kUnsupportedFormat,
  kEmptyAudio,
  kUnsupportedRate,
  kInvalidParams,
  kInvalidBand,
  kInvalidTaps,
  kRateMismatch,
  kTooShort,
  kInvalidNfft,
  kNegativeFrequency,
  kNegativeMel,
  kDegenerateFilter,
  kShapeMismatch,
  kInvalidFloor,
  kEmptyMatrix,
  kMissingChannel,
  kUnknownVariant,
  kIoError,
  kParseError,
  kLengthMismatch,
  kVariantMismatch,
  kInvalidThreshold,
  kEmptyPairs,
};

std::string_view error_code_name(ErrorCode code);

// All library failures are reported by throwing Error. The code lets callers
// (the CLI in particular) distinguish usage problems from runtime ones.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mcmfcc

#endif  // MCMFCC_ERROR_H_
