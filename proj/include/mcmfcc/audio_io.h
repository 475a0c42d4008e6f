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

#ifndef MCMFCC_AUDIO_IO_H_
#define MCMFCC_AUDIO_IO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

namespace mcmfcc {

// Working rate of the whole feature pipeline.
inline constexpr int kPipelineRateHz = 8000;

// Mono real-valued signal. Immutable once constructed; the constructor
// rejects non-finite samples and non-positive rates but allows an empty
// sample vector (operations that need data check for it themselves).
class Waveform {
 public:
  Waveform(std::vector<double> samples, int sample_rate_hz);

  std::span<const double> samples() const& noexcept { return samples_; }
  std::span<const double> samples() const&& = delete;
  int sample_rate_hz() const noexcept { return sample_rate_hz_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }

  friend bool operator==(const Waveform&, const Waveform&) = default;

 private:
  std::vector<double> samples_;
  int sample_rate_hz_;
};

// Reads a RIFF/WAVE file holding mono 16-bit PCM. Samples are scaled by
// 1/32768, so the representable range is [-1, 32767/32768].
Waveform load_wav(const std::filesystem::path& path);

// Writes mono 16-bit PCM. Samples are rounded to the nearest integer step
// and saturated to [-32768, 32767].
void write_wav(const std::filesystem::path& path, const Waveform& w);

// Accepts 8 kHz (returned unchanged) or 16 kHz (255-tap windowed-sinc
// low-pass at 3800 Hz, then every other sample). Output length is
// ceil(n / 2) for 16 kHz input. Filtered samples are clamped to [-1, 1].
Waveform resample_to_8k(const Waveform& w);

enum class SignalKind { kTone, kVowel, kNoise };

struct SynthParams {
  double freq_hz = 1000.0;                       // tone
  double f0_hz = 120.0;                          // vowel
  std::vector<double> formants_hz{700.0, 1200.0, 2600.0};  // vowel
  double formant_bandwidth_hz = 90.0;            // vowel
  std::optional<std::uint64_t> seed;             // noise (required)
  double duration_s = 1.0;
  double amplitude = 0.5;
};

// Deterministic 8 kHz test signals.
//   tone:  amplitude * sin(2*pi*freq*n/8000)
//   vowel: harmonics of f0 below Nyquist, each weighted by the sum of
//          Lorentzian resonances centred on the formants, under an
//          exp(-t/duration) decay; peak-normalised to `amplitude`
//   noise: uniform in [-amplitude, amplitude] from a seeded mt19937_64
Waveform synth_signal(SignalKind kind, const SynthParams& params);

}  // namespace mcmfcc

#endif  // MCMFCC_AUDIO_IO_H_
