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

#ifndef MCMFCC_MEL_FILTERBANK_H_
#define MCMFCC_MEL_FILTERBANK_H_

#include <filesystem>
#include <vector>

#include "mcmfcc/dsp_core.h"
#include "mcmfcc/matrix.h"

namespace mcmfcc {

// 2595 * log10(1 + f/700).
double hz_to_mel(double f_hz);
// 700 * (10^(m/2595) - 1).
double mel_to_hz(double mel);

// Triangular filters whose K+2 boundary points are uniform in mel between
// the band edges. Each triangle is linear in mel and peaks at 1, so
// adjacent triangles sum to exactly 1 between the first and last peaks.
struct MelFilterbank {
  Matrix weights;                  // K x (nfft/2 + 1)
  std::vector<double> edges_mel;   // K + 2 boundary points
  std::vector<double> peak_freqs_hz;
  double band_lo_hz = 0.0;
  double band_hi_hz = 0.0;
  int nfft = 0;
  int sample_rate_hz = kPipelineRateHz;

  std::size_t size() const noexcept { return peak_freqs_hz.size(); }

  // Continuous response of filter k at an arbitrary frequency.
  double triangle(std::size_t k, double freq_hz) const;
};

MelFilterbank build_filterbank(double band_lo_hz, double band_hi_hz,
                               int n_filters, int nfft = kDefaultNfft,
                               int sample_rate_hz = kPipelineRateHz);

// E[l,k] = sum over bins of weights[k,bin] * power[l,bin].
Matrix apply_filterbank(const MelFilterbank& fb, const SpectrumMatrix& s);

// CSV `filter_index,bin_index,freq_hz,weight`, non-zero weights only.
void write_filterbank_csv(const std::filesystem::path& path,
                          const MelFilterbank& fb);

}  // namespace mcmfcc

#endif  // MCMFCC_MEL_FILTERBANK_H_
