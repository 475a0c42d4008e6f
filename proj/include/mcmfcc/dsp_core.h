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

#ifndef MCMFCC_DSP_CORE_H_
#define MCMFCC_DSP_CORE_H_

#include <filesystem>
#include <utility>
#include <vector>

#include "mcmfcc/audio_io.h"
#include "mcmfcc/matrix.h"

namespace mcmfcc {

inline constexpr double kDefaultPreemphasis = 0.97;
inline constexpr int kDefaultFirTaps = 255;
inline constexpr double kDefaultFrameMs = 20.0;
inline constexpr double kDefaultOverlapMs = 5.0;
inline constexpr int kDefaultNfft = 256;

struct PreemphasisConfig {
  double coeff = kDefaultPreemphasis;
};

// out[n] = in[n] - coeff * in[n-1], with in[-1] = 0.
Waveform preemphasize(const Waveform& w, PreemphasisConfig cfg = {});

struct FirFilter {
  std::vector<double> taps;
  double band_lo_hz = 0.0;
  double band_hi_hz = 0.0;
  int sample_rate_hz = kPipelineRateHz;
};

struct Band {
  double lo_hz;
  double hi_hz;
  friend bool operator==(const Band&, const Band&) = default;
};

// Ordered subbands; each hi must not exceed 4000 Hz.
struct ChannelPlan {
  std::vector<Band> bands;
};

// The five analysis channels: 20-500, 450-1000, 950-2000, 1950-3000 and
// 2950-4000 Hz.
ChannelPlan five_channel_plan();

// Hamming-windowed sinc design. lo_hz > 0 gives the difference of two ideal
// low-passes (band-pass); lo_hz == 0 degenerates to a low-pass at hi_hz.
FirFilter design_bandpass(double lo_hz, double hi_hz, int taps,
                          int sample_rate_hz);

// Direct convolution, zero-padded, shifted by the group delay (taps-1)/2 so
// that the output has the input's length and timing.
Waveform apply_fir(const FirFilter& f, const Waveform& w);

std::vector<Waveform> split_channels(const Waveform& w, const ChannelPlan& plan,
                                     int taps = kDefaultFirTaps);

struct FrameMatrix {
  Matrix frames;  // L x N
  int frame_len = 0;
  int hop = 0;
};

// N = round(frame_ms*fs/1000), hop = round((frame_ms-overlap_ms)*fs/1000),
// L = floor((len-N)/hop) + 1. Trailing samples that do not fill a frame are
// dropped.
FrameMatrix frame_blocks(const Waveform& w, double frame_ms = kDefaultFrameMs,
                         double overlap_ms = kDefaultOverlapMs);

// Number of frames frame_blocks would produce, without building them.
int frame_count(std::size_t length, int frame_len, int hop);

std::vector<double> hamming_coefficients(int n);
FrameMatrix hamming_window(const FrameMatrix& m);

struct SpectrumMatrix {
  Matrix power;  // L x (nfft/2 + 1), |X[k]|^2, unnormalised
  int nfft = 0;
  int sample_rate_hz = kPipelineRateHz;
};

SpectrumMatrix power_spectrum(const FrameMatrix& m, int nfft = kDefaultNfft,
                              int sample_rate_hz = kPipelineRateHz);

struct ResponsePoint {
  double freq_hz;
  double magnitude_db;
};

// |H| in dB, floored at -200 dB.
double magnitude_db_at(const FirFilter& f, double freq_hz);

// n_points frequencies uniformly spaced on [0, fs/2], endpoints included.
std::vector<ResponsePoint> frequency_response(const FirFilter& f, int n_points);

// CSV with header `freq_hz,magnitude_db`, 9 significant digits.
void write_frequency_response_csv(const std::filesystem::path& path,
                                  const std::vector<ResponsePoint>& response);

}  // namespace mcmfcc

#endif  // MCMFCC_DSP_CORE_H_
