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

#ifndef MCMFCC_FFT_H_
#define MCMFCC_FFT_H_

#include <complex>
#include <span>

namespace mcmfcc {

constexpr bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 decimation-in-time FFT (forward, e^{-j...}).
// data.size() must be a power of two.
void fft_in_place(std::span<std::complex<double>> data);

}  // namespace mcmfcc

#endif  // MCMFCC_FFT_H_
