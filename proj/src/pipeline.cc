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

#include "mcmfcc/pipeline.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "mcmfcc/error.h"
#include "mcmfcc/mel_filterbank.h"
#include "mcmfcc/text_io.h"

namespace mcmfcc {

namespace {

constexpr int kChannelFilters[] = {18, 15, 12, 10, 8};
constexpr int kSingleChannelFilters = 22;
constexpr Band kFullBand{20.0, 4000.0};
constexpr Band kLowRange{20.0, 1000.0};
constexpr Band kHighRange{950.0, 4000.0};

std::string to_upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": " + what);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Expects `key=value` and returns value.
std::string_view field(std::string_view token, std::string_view key,
                       std::size_t line_no) {
  if (token.size() <= key.size() || token.substr(0, key.size()) != key ||
      token[key.size()] != '=') {
    parse_fail(line_no, "expected '" + std::string(key) + "=...', got '" +
                            std::string(token) + "'");
  }
  return token.substr(key.size() + 1);
}

}  // namespace

int VariantConfig::feature_length() const {
  int total = 0;
  for (const auto& ch : channels) {
    total += n_cepstra > 0 ? std::min(n_cepstra, ch.n_filters) : ch.n_filters;
  }
  return kStatsPerCoefficient * total;
}

VariantConfig variant_config(std::string_view name) {
  const std::string upper = to_upper(name);
  VariantConfig cfg;
  cfg.name = upper;
  if (upper == "SCFB") {
    cfg.channels.push_back({std::nullopt, kFullBand, kSingleChannelFilters});
    return cfg;
  }
  if (upper != "M5FB" && upper != "M2FB" && upper != "M1FB") {
    throw Error(ErrorCode::kUnknownVariant,
                "'" + std::string(name) + "' (expected M5FB, M2FB, M1FB or SCFB)");
  }
  const ChannelPlan plan = five_channel_plan();
  for (std::size_t i = 0; i < plan.bands.size(); ++i) {
    const Band fir = plan.bands[i];
    Band mel = fir;
    if (upper == "M2FB") mel = i < 2 ? kLowRange : kHighRange;
    if (upper == "M1FB") mel = kFullBand;
    cfg.channels.push_back({fir, mel, kChannelFilters[i]});
  }
  return cfg;
}

std::vector<Matrix> channel_log_energies(const Waveform& w,
                                         const VariantConfig& cfg) {
  if (w.sample_rate_hz() != kPipelineRateHz) {
    throw Error(ErrorCode::kUnsupportedRate, "extraction expects 8000 Hz input, got " +
                                                 std::to_string(w.sample_rate_hz()));
  }
  if (cfg.channels.empty()) throw Error(ErrorCode::kMissingChannel, "config has no channels");
  const Waveform emphasized = preemphasize(w, {cfg.preemph});

  std::vector<Matrix> out;
  out.reserve(cfg.channels.size());
  for (const ChannelSpec& ch : cfg.channels) {
    const Waveform signal =
        ch.fir_band ? apply_fir(design_bandpass(ch.fir_band->lo_hz, ch.fir_band->hi_hz,
                                                cfg.fir_taps, w.sample_rate_hz()),
                                emphasized)
                    : emphasized;
    const FrameMatrix frames = hamming_window(frame_blocks(signal, cfg.frame_ms, cfg.overlap_ms));
    const SpectrumMatrix spectrum = power_spectrum(frames, cfg.nfft, w.sample_rate_hz());
    const MelFilterbank fb = build_filterbank(ch.mel_band.lo_hz, ch.mel_band.hi_hz,
                                              ch.n_filters, cfg.nfft, w.sample_rate_hz());
    out.push_back(log_energies(apply_filterbank(fb, spectrum), cfg.log_floor));
  }
  return out;
}

FeatureVector extract(const Waveform& w, const VariantConfig& cfg) {
  const std::vector<Matrix> logs = channel_log_energies(w, cfg);
  std::vector<ChannelSummary> summaries;
  summaries.reserve(logs.size());
  for (std::size_t i = 0; i < logs.size(); ++i) {
    CepstralMatrix c = dct2(logs[i], static_cast<int>(i) + 1);
    if (cfg.n_cepstra > 0 && static_cast<std::size_t>(cfg.n_cepstra) < c.coeffs.cols()) {
      Matrix kept(c.coeffs.rows(), cfg.n_cepstra);
      for (std::size_t r = 0; r < kept.rows(); ++r) {
        const auto src = c.coeffs.row(r);
        std::copy_n(src.begin(), cfg.n_cepstra, kept.row(r).begin());
      }
      c.coeffs = std::move(kept);
    }
    summaries.push_back(summarize(c));
  }
  return concat_summaries(std::move(summaries), cfg.name);
}

std::string format_feature_file(const FeatureVector& fv) {
  const int total = std::accumulate(fv.coefficient_counts.begin(),
                                    fv.coefficient_counts.end(), 0);
  if (fv.entries.size() != static_cast<std::size_t>(kStatsPerCoefficient * total)) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(fv.entries.size()) + " entries for " +
                    std::to_string(total) + " coefficients");
  }
  std::string out = "#mcmfcc v1 variant=" + fv.variant_name + "\n";
  out += "#channels=" + std::to_string(fv.coefficient_counts.size()) + " filters=";
  for (std::size_t i = 0; i < fv.coefficient_counts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(fv.coefficient_counts[i]);
  }
  out += '\n';
  std::size_t e = 0;
  for (std::size_t ch = 0; ch < fv.coefficient_counts.size(); ++ch) {
    for (int k = 0; k < fv.coefficient_counts[ch]; ++k, e += kStatsPerCoefficient) {
      out += "ch=" + std::to_string(ch + 1) + " k=" + std::to_string(k) +
             " max=" + format_double(fv.entries[e]) +
             " min=" + format_double(fv.entries[e + 1]) +
             " mean=" + format_double(fv.entries[e + 2]) +
             " sd=" + format_double(fv.entries[e + 3]) + "\n";
    }
  }
  return out;
}

FeatureVector parse_feature_file(std::string_view text) {
  if (text.empty()) throw Error(ErrorCode::kParseError, "empty feature file");
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 2) throw Error(ErrorCode::kParseError, "missing header lines");

  constexpr std::string_view kMagic = "#mcmfcc v1 variant=";
  if (lines[0].substr(0, kMagic.size()) != kMagic) parse_fail(1, "bad magic");
  FeatureVector fv;
  fv.variant_name = std::string(lines[0].substr(kMagic.size()));
  VariantConfig cfg;
  try {
    cfg = variant_config(fv.variant_name);
  } catch (const Error&) {
    parse_fail(1, "unknown variant '" + fv.variant_name + "'");
  }
  if (cfg.name != fv.variant_name) parse_fail(1, "variant name must be upper case");

  const auto header = split(lines[1], ' ');
  if (header.size() != 2) parse_fail(2, "expected '#channels=<n> filters=<k,...>'");
  const auto n_channels = parse_int(field(header[0], "#channels", 2));
  if (!n_channels || *n_channels != static_cast<int>(cfg.channels.size())) {
    parse_fail(2, "channel count does not match variant " + cfg.name);
  }
  const auto counts = split(field(header[1], "filters", 2), ',');
  if (counts.size() != cfg.channels.size()) parse_fail(2, "filter list length mismatch");
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const auto k = parse_int(counts[i]);
    if (!k || *k < 1 || *k > cfg.channels[i].n_filters) {
      parse_fail(2, "bad coefficient count for channel " + std::to_string(i + 1));
    }
    fv.coefficient_counts.push_back(*k);
  }

  const int total = std::accumulate(fv.coefficient_counts.begin(),
                                    fv.coefficient_counts.end(), 0);
  if (lines.size() - 2 != static_cast<std::size_t>(total)) {
    throw Error(ErrorCode::kParseError,
                "variant " + cfg.name + " declares " + std::to_string(total) +
                    " coefficient lines, found " + std::to_string(lines.size() - 2));
  }
  fv.entries.reserve(static_cast<std::size_t>(total) * kStatsPerCoefficient);
  std::size_t line_no = 2;
  for (std::size_t ch = 0; ch < fv.coefficient_counts.size(); ++ch) {
    for (int k = 0; k < fv.coefficient_counts[ch]; ++k) {
      const std::string_view line = lines[line_no];
      ++line_no;
      const auto tokens = split(line, ' ');
      if (tokens.size() != 6) parse_fail(line_no, "expected 6 fields");
      if (parse_int(field(tokens[0], "ch", line_no)) != static_cast<int>(ch) + 1 ||
          parse_int(field(tokens[1], "k", line_no)) != k) {
        parse_fail(line_no, "out-of-order channel/coefficient index");
      }
      constexpr std::string_view kKeys[] = {"max", "min", "mean", "sd"};
      for (int s = 0; s < kStatsPerCoefficient; ++s) {
        const auto v = parse_double(field(tokens[2 + s], kKeys[s], line_no));
        if (!v || !std::isfinite(*v)) parse_fail(line_no, "bad value for " + std::string(kKeys[s]));
        fv.entries.push_back(*v);
      }
    }
  }
  return fv;
}

void write_feature_file(const FeatureVector& fv, const std::filesystem::path& path) {
  write_file_atomic(path, format_feature_file(fv));
}

FeatureVector read_feature_file(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_text_file(path);
  } catch (const Error& e) {
    throw Error(ErrorCode::kIoError, e.what());
  }
  return parse_feature_file(text);
}

}  // namespace mcmfcc
