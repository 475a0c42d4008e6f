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

#include "mcmfcc/error.h"

namespace mcmfcc {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::kEmptyAudio: return "EmptyAudio";
    case ErrorCode::kUnsupportedRate: return "UnsupportedRate";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kInvalidBand: return "InvalidBand";
    case ErrorCode::kInvalidTaps: return "InvalidTaps";
    case ErrorCode::kRateMismatch: return "RateMismatch";
    case ErrorCode::kTooShort: return "TooShort";
    case ErrorCode::kInvalidNfft: return "InvalidNfft";
    case ErrorCode::kNegativeFrequency: return "NegativeFrequency";
    case ErrorCode::kNegativeMel: return "NegativeMel";
    case ErrorCode::kDegenerateFilter: return "DegenerateFilter";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kInvalidFloor: return "InvalidFloor";
    case ErrorCode::kEmptyMatrix: return "EmptyMatrix";
    case ErrorCode::kMissingChannel: return "MissingChannel";
    case ErrorCode::kUnknownVariant: return "UnknownVariant";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kVariantMismatch: return "VariantMismatch";
    case ErrorCode::kInvalidThreshold: return "InvalidThreshold";
    case ErrorCode::kEmptyPairs: return "EmptyPairs";
  }
  return "Unknown";
}

}  // namespace mcmfcc
