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

#include "mcmfcc/dsp_core.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>

#include "mcmfcc/error.h"
#include "mcmfcc/fft.h"
#include "mcmfcc/text_io.h"

namespace mcmfcc {

namespace {

constexpr double kMagnitudeFloor = 1e-10;  // -200 dB
constexpr double kPlanMaxHz = 4000.0;

// Ideal low-pass impulse response at offset m from the centre tap.
double ideal_lowpass(double cutoff_hz, int sample_rate_hz, double m) {
  const double fc = cutoff_hz / sample_rate_hz;  // cycles per sample
  if (m == 0.0) return 2.0 * fc;
  return std::sin(2.0 * std::numbers::pi * fc * m) / (std::numbers::pi * m);
}

}  // namespace

Waveform preemphasize(const Waveform& w, PreemphasisConfig cfg) {
  if (w.empty()) throw Error(ErrorCode::kEmptyAudio, "pre-emphasis of empty waveform");
  if (!(cfg.coeff >= 0.0 && cfg.coeff < 1.0)) {
    throw Error(ErrorCode::kInvalidParams, "pre-emphasis coefficient must lie in [0, 1)");
  }
  const auto in = w.samples();
  std::vector<double> out(in.size());
  out[0] = in[0];
  for (std::size_t n = 1; n < in.size(); ++n) out[n] = in[n] - cfg.coeff * in[n - 1];
  return Waveform(std::move(out), w.sample_rate_hz());
}

ChannelPlan five_channel_plan() {
  return {{{20.0, 500.0}, {450.0, 1000.0}, {950.0, 2000.0}, {1950.0, 3000.0},
           {2950.0, 4000.0}}};
}

FirFilter design_bandpass(double lo_hz, double hi_hz, int taps,
                          int sample_rate_hz) {
  if (sample_rate_hz <= 0) {
    throw Error(ErrorCode::kInvalidParams, "sample rate must be positive");
  }
  const double nyquist = sample_rate_hz / 2.0;
  if (!(lo_hz >= 0.0 && lo_hz < hi_hz && hi_hz <= nyquist)) {
    throw Error(ErrorCode::kInvalidBand, "band [" + format_double(lo_hz) + ", " +
                                             format_double(hi_hz) + "] Hz at " +
                                             std::to_string(sample_rate_hz) + " Hz");
  }
  if (taps < 3 || taps % 2 == 0) {
    throw Error(ErrorCode::kInvalidTaps,
                std::to_string(taps) + " taps (need odd, at least 3)");
  }

  const std::vector<double> window = hamming_coefficients(taps);
  const int centre = (taps - 1) / 2;
  FirFilter f{std::vector<double>(taps), lo_hz, hi_hz, sample_rate_hz};
  for (int n = 0; n < taps; ++n) {
    const double m = n - centre;
    double h = ideal_lowpass(hi_hz, sample_rate_hz, m);
    if (lo_hz > 0.0) h -= ideal_lowpass(lo_hz, sample_rate_hz, m);
    f.taps[n] = h * window[n];
  }
  return f;
}

Waveform apply_fir(const FirFilter& f, const Waveform& w) {
  if (f.sample_rate_hz != w.sample_rate_hz()) {
    throw Error(ErrorCode::kRateMismatch,
                "filter at " + std::to_string(f.sample_rate_hz) + " Hz, signal at " +
                    std::to_string(w.sample_rate_hz()) + " Hz");
  }
  if (f.taps.empty()) throw Error(ErrorCode::kInvalidTaps, "filter has no taps");

  const auto x = w.samples();
  const auto& h = f.taps;
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  const auto m = static_cast<std::ptrdiff_t>(h.size());
  const std::ptrdiff_t delay = (m - 1) / 2;
  std::vector<double> y(x.size(), 0.0);
  // y[i] = full_conv[i + delay] = sum_k h[k] x[i + delay - k]
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const std::ptrdiff_t t = i + delay;
    const std::ptrdiff_t k_lo = std::max<std::ptrdiff_t>(0, t - (n - 1));
    const std::ptrdiff_t k_hi = std::min<std::ptrdiff_t>(m - 1, t);
    double acc = 0.0;
    for (std::ptrdiff_t k = k_lo; k <= k_hi; ++k) acc += h[k] * x[t - k];
    y[i] = acc;
  }
  return Waveform(std::move(y), w.sample_rate_hz());
}

std::vector<Waveform> split_channels(const Waveform& w, const ChannelPlan& plan,
                                     int taps) {
  for (std::size_t i = 0; i < plan.bands.size(); ++i) {
    const Band& b = plan.bands[i];
    if (!(b.hi_hz > b.lo_hz) || b.hi_hz > kPlanMaxHz) {
      throw Error(ErrorCode::kInvalidBand, "channel " + std::to_string(i + 1) +
                                               " band is not within (lo, 4000]");
    }
    if (i > 0 && b.lo_hz < plan.bands[i - 1].lo_hz) {
      throw Error(ErrorCode::kInvalidBand, "channel bands must be ordered by lower edge");
    }
  }
  std::vector<Waveform> out;
  out.reserve(plan.bands.size());
  for (const Band& b : plan.bands) {
    out.push_back(apply_fir(design_bandpass(b.lo_hz, b.hi_hz, taps, w.sample_rate_hz()), w));
  }
  return out;
}

int frame_count(std::size_t length, int frame_len, int hop) {
  if (frame_len <= 0 || hop <= 0 || length < static_cast<std::size_t>(frame_len)) return 0;
  return static_cast<int>((length - frame_len) / hop) + 1;
}

FrameMatrix frame_blocks(const Waveform& w, double frame_ms, double overlap_ms) {
  if (!(frame_ms > 0.0) || !(overlap_ms >= 0.0 && overlap_ms < frame_ms)) {
    throw Error(ErrorCode::kInvalidParams, "need frame_ms > 0 and 0 <= overlap_ms < frame_ms");
  }
  const double fs = w.sample_rate_hz();
  const int n = static_cast<int>(std::lround(frame_ms * fs / 1000.0));
  const int hop = static_cast<int>(std::lround((frame_ms - overlap_ms) * fs / 1000.0));
  if (n < 1 || hop < 1) {
    throw Error(ErrorCode::kInvalidParams, "frame or hop shorter than one sample");
  }
  if (w.size() < static_cast<std::size_t>(n)) {
    throw Error(ErrorCode::kTooShort, std::to_string(w.size()) +
                                          " samples, one frame needs " + std::to_string(n));
  }
  const int l = frame_count(w.size(), n, hop);
  FrameMatrix m{Matrix(l, n), n, hop};
  const auto s = w.samples();
  for (int row = 0; row < l; ++row) {
    const auto dst = m.frames.row(row);
    std::copy_n(s.begin() + static_cast<std::ptrdiff_t>(row) * hop, n, dst.begin());
  }
  return m;
}

std::vector<double> hamming_coefficients(int n) {
  if (n == 1) return {1.0};
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = 0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * i / (n - 1));
  }
  return w;
}

FrameMatrix hamming_window(const FrameMatrix& m) {
  FrameMatrix out = m;
  const std::vector<double> w = hamming_coefficients(static_cast<int>(m.frames.cols()));
  for (std::size_t r = 0; r < out.frames.rows(); ++r) {
    auto row = out.frames.row(r);
    for (std::size_t i = 0; i < row.size(); ++i) row[i] *= w[i];
  }
  return out;
}

SpectrumMatrix power_spectrum(const FrameMatrix& m, int nfft, int sample_rate_hz) {
  if (!is_power_of_two(nfft) || static_cast<std::size_t>(nfft) < m.frames.cols()) {
    throw Error(ErrorCode::kInvalidNfft,
                std::to_string(nfft) + " (need a power of two >= frame length " +
                    std::to_string(m.frames.cols()) + ")");
  }
  const std::size_t bins = static_cast<std::size_t>(nfft) / 2 + 1;
  SpectrumMatrix out{Matrix(m.frames.rows(), bins), nfft, sample_rate_hz};
  std::vector<std::complex<double>> buf(nfft);
  for (std::size_t r = 0; r < m.frames.rows(); ++r) {
    const auto row = m.frames.row(r);
    std::fill(buf.begin(), buf.end(), std::complex<double>{});
    std::copy(row.begin(), row.end(), buf.begin());
    fft_in_place(buf);
    auto dst = out.power.row(r);
    for (std::size_t k = 0; k < bins; ++k) dst[k] = std::norm(buf[k]);
  }
  return out;
}

double magnitude_db_at(const FirFilter& f, double freq_hz) {
  const double omega = 2.0 * std::numbers::pi * freq_hz / f.sample_rate_hz;
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < f.taps.size(); ++k) {
    re += f.taps[k] * std::cos(omega * static_cast<double>(k));
    im -= f.taps[k] * std::sin(omega * static_cast<double>(k));
  }
  return 20.0 * std::log10(std::max(std::hypot(re, im), kMagnitudeFloor));
}

std::vector<ResponsePoint> frequency_response(const FirFilter& f, int n_points) {
  if (n_points < 2) throw Error(ErrorCode::kInvalidParams, "need at least 2 points");
  const double nyquist = f.sample_rate_hz / 2.0;
  std::vector<ResponsePoint> out(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double freq = nyquist * i / (n_points - 1);
    out[i] = {freq, magnitude_db_at(f, freq)};
  }
  return out;
}

void write_frequency_response_csv(const std::filesystem::path& path,
                                  const std::vector<ResponsePoint>& response) {
  std::string text = "freq_hz,magnitude_db\n";
  char line[64];
  for (const auto& p : response) {
    std::snprintf(line, sizeof(line), "%.9g,%.9g\n", p.freq_hz, p.magnitude_db);
    text += line;
  }
  write_file_atomic(path, text);
}

}  // namespace mcmfcc
