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

#include "mcmfcc/audio_io.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <numbers>
#include <random>
#include <string>

#include "mcmfcc/dsp_core.h"
#include "mcmfcc/error.h"

namespace mcmfcc {

namespace {

constexpr double kPcmScale = 32768.0;
constexpr int kResampleTaps = 255;
constexpr double kResampleCutoffHz = 3800.0;

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

Waveform synth_tone(const SynthParams& p, std::size_t n) {
  std::vector<double> s(n);
  const double w = 2.0 * std::numbers::pi * p.freq_hz / kPipelineRateHz;
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = p.amplitude * std::sin(w * static_cast<double>(i));
  }
  return Waveform(std::move(s), kPipelineRateHz);
}

Waveform synth_vowel(const SynthParams& p, std::size_t n) {
  const double nyquist = kPipelineRateHz / 2.0;
  std::vector<double> s(n, 0.0);
  for (int h = 1; h * p.f0_hz < nyquist; ++h) {
    const double f = h * p.f0_hz;
    double weight = 0.0;
    for (double formant : p.formants_hz) {
      const double x = (f - formant) / p.formant_bandwidth_hz;
      weight += 1.0 / (1.0 + x * x);
    }
    const double w = 2.0 * std::numbers::pi * f / kPipelineRateHz;
    for (std::size_t i = 0; i < n; ++i) {
      s[i] += weight * std::sin(w * static_cast<double>(i));
    }
  }
  const double decay_samples = p.duration_s * kPipelineRateHz;
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s[i] *= std::exp(-static_cast<double>(i) / decay_samples);
    peak = std::max(peak, std::abs(s[i]));
  }
  if (peak > 0.0) {
    for (double& v : s) v *= p.amplitude / peak;
  }
  return Waveform(std::move(s), kPipelineRateHz);
}

Waveform synth_noise(const SynthParams& p, std::size_t n) {
  // Map raw 64-bit draws to [0, 1) by hand; std::uniform_real_distribution
  // is not specified bit-for-bit across standard libraries.
  std::mt19937_64 rng(*p.seed);
  std::vector<double> s(n);
  for (double& v : s) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    v = p.amplitude * (2.0 * u - 1.0);
  }
  return Waveform(std::move(s), kPipelineRateHz);
}

}  // namespace

Waveform::Waveform(std::vector<double> samples, int sample_rate_hz)
    : samples_(std::move(samples)), sample_rate_hz_(sample_rate_hz) {
  if (sample_rate_hz_ <= 0) {
    throw Error(ErrorCode::kInvalidParams,
                "sample rate must be positive, got " + std::to_string(sample_rate_hz_));
  }
  if (!std::all_of(samples_.begin(), samples_.end(),
                   [](double v) { return std::isfinite(v); })) {
    throw Error(ErrorCode::kInvalidParams, "waveform contains non-finite samples");
  }
}

Waveform load_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kNotFound, "cannot open " + path.string());
  const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                         std::istreambuf_iterator<char>());
  const std::string where = " in " + path.string();
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw Error(ErrorCode::kUnsupportedFormat, "not a RIFF/WAVE file" + where);
  }

  bool have_fmt = false;
  int sample_rate = 0;
  const unsigned char* data = nullptr;
  std::size_t data_size = 0;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* chunk = bytes.data() + pos;
    const std::size_t size = read_u32(chunk + 4);
    const std::size_t body = pos + 8;
    const std::size_t available = bytes.size() - body;
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16 || available < 16) {
        throw Error(ErrorCode::kUnsupportedFormat, "short fmt chunk" + where);
      }
      const unsigned char* f = bytes.data() + body;
      const int audio_format = read_u16(f);
      const int channels = read_u16(f + 2);
      sample_rate = static_cast<int>(read_u32(f + 4));
      const int bits = read_u16(f + 14);
      if (audio_format != 1) {
        throw Error(ErrorCode::kUnsupportedFormat,
                    "audio format " + std::to_string(audio_format) + " is not PCM" + where);
      }
      if (channels != 1) {
        throw Error(ErrorCode::kUnsupportedFormat,
                    std::to_string(channels) + " channels, expected mono" + where);
      }
      if (bits != 16) {
        throw Error(ErrorCode::kUnsupportedFormat,
                    std::to_string(bits) + "-bit samples, expected 16" + where);
      }
      if (sample_rate <= 0) {
        throw Error(ErrorCode::kUnsupportedFormat, "zero sample rate" + where);
      }
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      if (size > available) {
        throw Error(ErrorCode::kUnsupportedFormat, "truncated data chunk" + where);
      }
      data = bytes.data() + body;
      data_size = size;
      break;
    }
    pos = body + size + (size & 1);  // chunks are word aligned
  }
  if (!have_fmt) throw Error(ErrorCode::kUnsupportedFormat, "missing fmt chunk" + where);
  if (data == nullptr) throw Error(ErrorCode::kUnsupportedFormat, "missing data chunk" + where);

  const std::size_t n = data_size / 2;
  if (n == 0) throw Error(ErrorCode::kEmptyAudio, "no samples" + where);
  std::vector<double> samples(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto raw = static_cast<std::int16_t>(read_u16(data + 2 * i));
    samples[i] = raw / kPcmScale;
  }
  return Waveform(std::move(samples), sample_rate);
}

void write_wav(const std::filesystem::path& path, const Waveform& w) {
  const auto data_bytes = static_cast<std::uint32_t>(w.size() * 2);
  std::string out;
  out.reserve(44 + data_bytes);
  out += "RIFF";
  put_u32(out, 36 + data_bytes);
  out += "WAVEfmt ";
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<std::uint32_t>(w.sample_rate_hz()));
  put_u32(out, static_cast<std::uint32_t>(w.sample_rate_hz()) * 2);
  put_u16(out, 2);
  put_u16(out, 16);
  out += "data";
  put_u32(out, data_bytes);
  for (double v : w.samples()) {
    const double q = std::clamp(std::round(v * kPcmScale), -32768.0, 32767.0);
    put_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  file.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!file) throw Error(ErrorCode::kIoError, "short write to " + path.string());
}

Waveform resample_to_8k(const Waveform& w) {
  if (w.sample_rate_hz() == kPipelineRateHz) return w;
  if (w.sample_rate_hz() != 2 * kPipelineRateHz) {
    throw Error(ErrorCode::kUnsupportedRate,
                std::to_string(w.sample_rate_hz()) + " Hz (expected 8000 or 16000)");
  }
  const FirFilter anti_alias =
      design_bandpass(0.0, kResampleCutoffHz, kResampleTaps, w.sample_rate_hz());
  const Waveform filtered = apply_fir(anti_alias, w);
  const auto in = filtered.samples();
  std::vector<double> out((in.size() + 1) / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::clamp(in[2 * i], -1.0, 1.0);
  }
  return Waveform(std::move(out), kPipelineRateHz);
}

Waveform synth_signal(SignalKind kind, const SynthParams& params) {
  const double nyquist = kPipelineRateHz / 2.0;
  if (!(params.duration_s > 0.0) || !std::isfinite(params.duration_s)) {
    throw Error(ErrorCode::kInvalidParams, "duration must be positive");
  }
  if (!std::isfinite(params.amplitude) || params.amplitude < 0.0) {
    throw Error(ErrorCode::kInvalidParams, "amplitude must be non-negative");
  }
  const auto n = static_cast<std::size_t>(std::llround(params.duration_s * kPipelineRateHz));
  if (n == 0) throw Error(ErrorCode::kInvalidParams, "duration shorter than one sample");

  switch (kind) {
    case SignalKind::kTone:
      if (!(params.freq_hz >= 0.0 && params.freq_hz < nyquist)) {
        throw Error(ErrorCode::kInvalidParams, "tone frequency must lie in [0, 4000) Hz");
      }
      return synth_tone(params, n);
    case SignalKind::kVowel:
      if (!(params.f0_hz > 0.0 && params.f0_hz < nyquist)) {
        throw Error(ErrorCode::kInvalidParams, "f0 must lie in (0, 4000) Hz");
      }
      if (params.formants_hz.empty()) {
        throw Error(ErrorCode::kInvalidParams, "vowel needs at least one formant");
      }
      for (double f : params.formants_hz) {
        if (!(f > 0.0 && f < nyquist)) {
          throw Error(ErrorCode::kInvalidParams, "formants must lie in (0, 4000) Hz");
        }
      }
      if (!(params.formant_bandwidth_hz > 0.0)) {
        throw Error(ErrorCode::kInvalidParams, "formant bandwidth must be positive");
      }
      return synth_vowel(params, n);
    case SignalKind::kNoise:
      if (!params.seed) throw Error(ErrorCode::kInvalidParams, "noise requires a seed");
      return synth_noise(params, n);
  }
  throw Error(ErrorCode::kInvalidParams, "unknown signal kind");
}

}  // namespace mcmfcc
