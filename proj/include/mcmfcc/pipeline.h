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

#ifndef MCMFCC_PIPELINE_H_
#define MCMFCC_PIPELINE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcmfcc/audio_io.h"
#include "mcmfcc/cepstrum.h"
#include "mcmfcc/dsp_core.h"
#include "mcmfcc/features.h"

namespace mcmfcc {

struct ChannelSpec {
  std::optional<Band> fir_band;  // nullopt: no subband split (single channel)
  Band mel_band;
  int n_filters;
};

struct VariantConfig {
  std::string name;
  std::vector<ChannelSpec> channels;
  double frame_ms = kDefaultFrameMs;
  double overlap_ms = kDefaultOverlapMs;
  double preemph = kDefaultPreemphasis;
  int nfft = kDefaultNfft;
  int fir_taps = kDefaultFirTaps;
  double log_floor = kDefaultLogFloor;
  // 0 keeps every DCT coefficient; otherwise the first n per channel.
  int n_cepstra = 0;

  int feature_length() const;
};

// M5FB, M2FB, M1FB or SCFB (case-insensitive).
VariantConfig variant_config(std::string_view name);

inline constexpr std::string_view kVariantNames[] = {"M5FB", "M2FB", "M1FB",
                                                     "SCFB"};

// Pre-emphasis, optional FIR split, then per channel: framing, Hamming
// window, power spectrum, mel filterbank, log. One L x K matrix per channel.
std::vector<Matrix> channel_log_energies(const Waveform& w,
                                         const VariantConfig& cfg);

// Full extraction: channel_log_energies, DCT, per-coefficient statistics.
FeatureVector extract(const Waveform& w, const VariantConfig& cfg);

// Text format:
//   #mcmfcc v1 variant=<NAME>
//   #channels=<n> filters=<k1,k2,...>
//   ch=<i> k=<j> max=<v> min=<v> mean=<v> sd=<v>     (one per coefficient)
// Channels are 1-based, coefficients 0-based, values shortest round-trip.
std::string format_feature_file(const FeatureVector& fv);
FeatureVector parse_feature_file(std::string_view text);

void write_feature_file(const FeatureVector& fv,
                        const std::filesystem::path& path);
FeatureVector read_feature_file(const std::filesystem::path& path);

}  // namespace mcmfcc

#endif  // MCMFCC_PIPELINE_H_
