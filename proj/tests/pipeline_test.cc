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

#include <doctest.h>

#include <cmath>
#include <random>

#include "mcmfcc/error.h"
#include "mcmfcc/mel_filterbank.h"
#include "mcmfcc/pipeline.h"
#include "oracles.h"
#include "test_util.h"

namespace mcmfcc {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an mcmfcc::Error");
  return ErrorCode::kIoError;
}

Waveform tone(double freq, double seconds = 0.5) {
  SynthParams p;
  p.freq_hz = freq;
  p.duration_s = seconds;
  return synth_signal(SignalKind::kTone, p);
}

TEST_CASE("variant_config tables") {
  const VariantConfig scfb = variant_config("scfb");
  CHECK(scfb.name == "SCFB");
  REQUIRE(scfb.channels.size() == 1);
  CHECK_FALSE(scfb.channels[0].fir_band.has_value());
  CHECK(scfb.channels[0].mel_band == Band{20.0, 4000.0});
  CHECK(scfb.channels[0].n_filters == 22);
  CHECK(scfb.feature_length() == 88);

  const VariantConfig m5 = variant_config("m5fb");
  REQUIRE(m5.channels.size() == 5);
  CHECK(*m5.channels[0].fir_band == Band{20.0, 500.0});
  const Band bands[] = {{20, 500}, {450, 1000}, {950, 2000}, {1950, 3000}, {2950, 4000}};
  const int filters[] = {18, 15, 12, 10, 8};
  for (int i = 0; i < 5; ++i) {
    CHECK(*m5.channels[i].fir_band == bands[i]);
    CHECK(m5.channels[i].mel_band == bands[i]);
    CHECK(m5.channels[i].n_filters == filters[i]);
  }
  CHECK(m5.feature_length() == 252);

  const VariantConfig m2 = variant_config("M2fb");
  for (int i = 0; i < 5; ++i) {
    CHECK(*m2.channels[i].fir_band == bands[i]);
    CHECK(m2.channels[i].mel_band == (i < 2 ? Band{20, 1000} : Band{950, 4000}));
    CHECK(m2.channels[i].n_filters == filters[i]);
  }
  const VariantConfig m1 = variant_config("M1FB");
  for (int i = 0; i < 5; ++i) {
    CHECK(*m1.channels[i].fir_band == bands[i]);
    CHECK(m1.channels[i].mel_band == Band{20, 4000});
    CHECK(m1.channels[i].n_filters == filters[i]);
  }
  CHECK(m5.frame_ms == 20.0);
  CHECK(m5.overlap_ms == 5.0);
  CHECK(m5.preemph == 0.97);
  CHECK(m5.nfft == 256);
  CHECK(m5.fir_taps == 255);
  CHECK(m5.log_floor == 1e-10);

  CHECK(code_of([] { variant_config("m3fb"); }) == ErrorCode::kUnknownVariant);
}

TEST_CASE("extract lengths and determinism for every variant") {
  SynthParams p;
  p.seed = 5;
  p.duration_s = 0.3;
  const Waveform w = synth_signal(SignalKind::kNoise, p);
  for (std::string_view name : kVariantNames) {
    const VariantConfig cfg = variant_config(name);
    const FeatureVector a = extract(w, cfg);
    CHECK(static_cast<int>(a.entries.size()) == cfg.feature_length());
    CHECK(a == extract(w, cfg));
    for (double v : a.entries) CHECK(std::isfinite(v));
  }
}

TEST_CASE("extract truncates cepstra when asked") {
  VariantConfig cfg = variant_config("M5FB");
  cfg.n_cepstra = 9;
  const FeatureVector fv = extract(tone(700.0), cfg);
  CHECK(fv.coefficient_counts == std::vector<int>{9, 9, 9, 9, 8});
  CHECK(fv.entries.size() == 4u * 44u);
  CHECK(static_cast<int>(fv.entries.size()) == cfg.feature_length());
}

TEST_CASE("extract errors") {
  CHECK(code_of([] { extract(Waveform(std::vector<double>(100, 0.1), 8000),
                             variant_config("SCFB")); }) == ErrorCode::kTooShort);
  CHECK(code_of([] { extract(Waveform(std::vector<double>(1000, 0.1), 16000),
                             variant_config("SCFB")); }) == ErrorCode::kUnsupportedRate);
}

TEST_CASE("a 1 kHz tone peaks in the SCFB filter nearest 1 kHz") {
  const VariantConfig cfg = variant_config("SCFB");
  const Matrix logs = channel_log_energies(tone(1000.0), cfg).at(0);
  std::vector<double> mean(logs.cols(), 0.0);
  for (std::size_t l = 0; l < logs.rows(); ++l) {
    for (std::size_t k = 0; k < logs.cols(); ++k) mean[k] += logs(l, k);
  }
  const auto argmax = std::max_element(mean.begin(), mean.end()) - mean.begin();
  const MelFilterbank fb = build_filterbank(20.0, 4000.0, 22);
  std::size_t nearest = 0;
  for (std::size_t k = 1; k < fb.size(); ++k) {
    if (std::abs(fb.peak_freqs_hz[k] - 1000.0) < std::abs(fb.peak_freqs_hz[nearest] - 1000.0)) {
      nearest = k;
    }
  }
  CHECK(static_cast<std::size_t>(argmax) == nearest);
}

TEST_CASE("a 250 Hz tone carries more c0 in channel 1 than channel 5") {
  const FeatureVector fv = extract(tone(250.0), variant_config("M5FB"));
  // mean of c0 is the third statistic of the first coefficient in each channel
  const std::size_t ch1_c0_mean = 2;
  const std::size_t ch5_offset = 4 * (18 + 15 + 12 + 10);
  CHECK(fv.entries[ch1_c0_mean] > fv.entries[ch5_offset + 2]);
}

TEST_CASE("SCFB with a 0-4000 Hz mel band matches a straight-line MFCC reference") {
  SynthParams p;
  p.seed = 99;
  p.duration_s = 0.25;
  const Waveform w = synth_signal(SignalKind::kNoise, p);
  VariantConfig cfg = variant_config("SCFB");
  cfg.channels[0].mel_band = {0.0, 4000.0};
  const FeatureVector fv = extract(w, cfg);
  const std::vector<double> x(w.samples().begin(), w.samples().end());
  const auto ref = oracle::straight_line_mfcc_stats(x, 0.0, 4000.0, 22);
  REQUIRE(ref.size() == fv.entries.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    CHECK(std::abs(fv.entries[i] - ref[i]) <= 1e-9);
  }
}

TEST_CASE("trailing samples shorter than a hop do not change the features") {
  const Waveform base = tone(440.0, 0.2);  // 1600 samples -> 12 frames, 40 spare
  std::vector<double> padded(base.samples().begin(), base.samples().end());
  padded.resize(padded.size() + 50, 0.0);  // 90 spare < hop, still 12 frames
  const VariantConfig cfg = variant_config("SCFB");
  CHECK(extract(base, cfg) == extract(Waveform(padded, 8000), cfg));
}

TEST_CASE("feature file roundtrip and format") {
  SynthParams p;
  p.seed = 17;
  p.duration_s = 0.2;
  const FeatureVector fv = extract(synth_signal(SignalKind::kNoise, p), variant_config("M2FB"));
  const std::string text = format_feature_file(fv);
  CHECK(text.rfind("#mcmfcc v1 variant=M2FB\n#channels=5 filters=18,15,12,10,8\nch=1 k=0 max=", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 2 + 63);
  CHECK(parse_feature_file(text) == fv);

  testing::TempDir dir("feat");
  write_feature_file(fv, dir / "a.feat");
  CHECK(read_feature_file(dir / "a.feat") == fv);
  CHECK(code_of([&] { read_feature_file(dir / "missing.feat"); }) == ErrorCode::kIoError);
}

TEST_CASE("feature file parse errors") {
  CHECK(code_of([] { parse_feature_file(""); }) == ErrorCode::kParseError);
  CHECK(code_of([] { parse_feature_file("hello\nworld\n"); }) == ErrorCode::kParseError);

  std::string eight = "#mcmfcc v1 variant=M5FB\n#channels=5 filters=18,15,12,10,8\n";
  for (int k = 0; k < 2; ++k) {
    eight += "ch=1 k=" + std::to_string(k) + " max=1 min=0 mean=0.5 sd=0.1\n";
  }
  CHECK(code_of([&] { parse_feature_file(eight); }) == ErrorCode::kParseError);

  const std::string scfb_head = "#mcmfcc v1 variant=SCFB\n#channels=1 filters=1\n";
  CHECK(parse_feature_file(scfb_head + "ch=1 k=0 max=1 min=0 mean=0.5 sd=0.25\n").entries ==
        std::vector<double>{1.0, 0.0, 0.5, 0.25});
  CHECK(code_of([&] { parse_feature_file(scfb_head + "ch=1 k=0 max=inf min=0 mean=0 sd=0\n"); }) ==
        ErrorCode::kParseError);
  CHECK(code_of([&] { parse_feature_file(scfb_head + "ch=1 k=0 max=1 min=0 mean=0\n"); }) ==
        ErrorCode::kParseError);
  CHECK(code_of([&] { parse_feature_file(scfb_head + "ch=1 k=1 max=1 min=0 mean=0 sd=0\n"); }) ==
        ErrorCode::kParseError);
  CHECK(code_of([] { parse_feature_file("#mcmfcc v1 variant=M9FB\n#channels=1 filters=1\n"); }) ==
        ErrorCode::kParseError);
  CHECK(code_of([] { parse_feature_file("#mcmfcc v1 variant=SCFB\n#channels=1 filters=23\n"); }) ==
        ErrorCode::kParseError);
}

TEST_CASE("feature file roundtrip is exact for arbitrary doubles") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> expo(-300.0, 300.0);
  for (int trial = 0; trial < 50; ++trial) {
    FeatureVector fv{"SCFB", {22}, std::vector<double>(88)};
    for (double& v : fv.entries) {
      v = std::pow(10.0, expo(rng)) * ((rng() & 1) ? 1.0 : -1.0);
    }
    CHECK(parse_feature_file(format_feature_file(fv)) == fv);
  }
}

}  // namespace
}  // namespace mcmfcc
