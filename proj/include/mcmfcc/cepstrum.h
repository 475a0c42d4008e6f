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

#ifndef MCMFCC_CEPSTRUM_H_
#define MCMFCC_CEPSTRUM_H_

#include "mcmfcc/matrix.h"

namespace mcmfcc {

inline constexpr double kDefaultLogFloor = 1e-10;

struct CepstralMatrix {
  Matrix coeffs;  // L x K
  int channel_index = 1;
};

// out = ln(max(E, floor)).
Matrix log_energies(const Matrix& energies, double floor = kDefaultLogFloor);

// Row-wise orthonormal DCT-II keeping all K coefficients.
CepstralMatrix dct2(const Matrix& x, int channel_index = 1);

// Inverse of dct2 (orthonormal DCT-III).
Matrix idct2(const CepstralMatrix& c);

}  // namespace mcmfcc

#endif  // MCMFCC_CEPSTRUM_H_
