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

#include "mcmfcc/mel_filterbank.h"

#include <cmath>
#include <cstdio>
#include <string>

#include "mcmfcc/error.h"
#include "mcmfcc/fft.h"
#include "mcmfcc/text_io.h"

namespace mcmfcc {

double hz_to_mel(double f_hz) {
  if (!(f_hz >= 0.0)) {
    throw Error(ErrorCode::kNegativeFrequency, format_double(f_hz) + " Hz");
  }
  return 2595.0 * std::log10(1.0 + f_hz / 700.0);
}

double mel_to_hz(double mel) {
  if (!(mel >= 0.0)) throw Error(ErrorCode::kNegativeMel, format_double(mel) + " mel");
  return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
}

double MelFilterbank::triangle(std::size_t k, double freq_hz) const {
  const double m = hz_to_mel(freq_hz);
  const double left = edges_mel[k];
  const double centre = edges_mel[k + 1];
  const double right = edges_mel[k + 2];
  if (m <= left || m >= right) return 0.0;
  if (m <= centre) return (m - left) / (centre - left);
  return (right - m) / (right - centre);
}

MelFilterbank build_filterbank(double band_lo_hz, double band_hi_hz,
                               int n_filters, int nfft, int sample_rate_hz) {
  if (sample_rate_hz <= 0 || !(band_lo_hz >= 0.0 && band_lo_hz < band_hi_hz &&
                               band_hi_hz <= sample_rate_hz / 2.0)) {
    throw Error(ErrorCode::kInvalidBand,
                "mel band [" + format_double(band_lo_hz) + ", " + format_double(band_hi_hz) +
                    "] Hz at " + std::to_string(sample_rate_hz) + " Hz");
  }
  if (n_filters < 1) throw Error(ErrorCode::kInvalidParams, "need at least one filter");
  if (!is_power_of_two(nfft)) {
    throw Error(ErrorCode::kInvalidNfft, std::to_string(nfft) + " is not a power of two");
  }

  MelFilterbank fb;
  fb.band_lo_hz = band_lo_hz;
  fb.band_hi_hz = band_hi_hz;
  fb.nfft = nfft;
  fb.sample_rate_hz = sample_rate_hz;

  const double mel_lo = hz_to_mel(band_lo_hz);
  const double mel_hi = hz_to_mel(band_hi_hz);
  const int points = n_filters + 2;
  fb.edges_mel.resize(points);
  for (int i = 0; i < points; ++i) {
    fb.edges_mel[i] = mel_lo + (mel_hi - mel_lo) * i / (points - 1);
  }
  fb.edges_mel.back() = mel_hi;
  fb.peak_freqs_hz.resize(n_filters);
  for (int k = 0; k < n_filters; ++k) fb.peak_freqs_hz[k] = mel_to_hz(fb.edges_mel[k + 1]);

  const std::size_t bins = static_cast<std::size_t>(nfft) / 2 + 1;
  fb.weights = Matrix(n_filters, bins);
  for (int k = 0; k < n_filters; ++k) {
    bool any = false;
    for (std::size_t b = 0; b < bins; ++b) {
      const double w = fb.triangle(k, static_cast<double>(b) * sample_rate_hz / nfft);
      fb.weights(k, b) = w;
      any = any || w > 0.0;
    }
    if (!any) {
      throw Error(ErrorCode::kDegenerateFilter,
                  "filter " + std::to_string(k) + " of " + std::to_string(n_filters) +
                      " over [" + format_double(band_lo_hz) + ", " +
                      format_double(band_hi_hz) + "] Hz covers no FFT bin at nfft=" +
                      std::to_string(nfft));
    }
  }
  return fb;
}

Matrix apply_filterbank(const MelFilterbank& fb, const SpectrumMatrix& s) {
  if (fb.nfft != s.nfft || fb.sample_rate_hz != s.sample_rate_hz ||
      fb.weights.cols() != s.power.cols()) {
    throw Error(ErrorCode::kShapeMismatch,
                "filterbank nfft=" + std::to_string(fb.nfft) + "@" +
                    std::to_string(fb.sample_rate_hz) + " Hz, spectrum nfft=" +
                    std::to_string(s.nfft) + "@" + std::to_string(s.sample_rate_hz) + " Hz");
  }
  const std::size_t k_count = fb.weights.rows();
  Matrix e(s.power.rows(), k_count);
  for (std::size_t l = 0; l < s.power.rows(); ++l) {
    const auto power = s.power.row(l);
    for (std::size_t k = 0; k < k_count; ++k) {
      const auto w = fb.weights.row(k);
      double acc = 0.0;
      for (std::size_t b = 0; b < power.size(); ++b) acc += w[b] * power[b];
      e(l, k) = acc;
    }
  }
  return e;
}

void write_filterbank_csv(const std::filesystem::path& path,
                          const MelFilterbank& fb) {
  std::string text = "filter_index,bin_index,freq_hz,weight\n";
  char line[96];
  for (std::size_t k = 0; k < fb.weights.rows(); ++k) {
    for (std::size_t b = 0; b < fb.weights.cols(); ++b) {
      const double w = fb.weights(k, b);
      if (w == 0.0) continue;
      const double freq = static_cast<double>(b) * fb.sample_rate_hz / fb.nfft;
      std::snprintf(line, sizeof(line), "%zu,%zu,%.9g,%.9g\n", k, b, freq, w);
      text += line;
    }
  }
  write_file_atomic(path, text);
}

}  // namespace mcmfcc
