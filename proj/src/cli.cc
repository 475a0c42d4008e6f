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

#include "mcmfcc/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "mcmfcc/audio_io.h"
#include "mcmfcc/comparison.h"
#include "mcmfcc/error.h"
#include "mcmfcc/mel_filterbank.h"
#include "mcmfcc/pipeline.h"
#include "mcmfcc/text_io.h"

namespace mcmfcc {

namespace {

// Thrown for argument values CLI11 cannot validate on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

VariantConfig variant_or_usage(const std::string& name) {
  try {
    return variant_config(name);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

FeatureVector extract_word(const std::filesystem::path& wav, const VariantConfig& cfg) {
  return extract(resample_to_8k(load_wav(wav)), cfg);
}

struct ExtractArgs {
  std::string variant;
  std::string input;
  std::string output;
  int n_cepstra = 0;
};

int cmd_extract(const ExtractArgs& a, std::ostream& out) {
  VariantConfig cfg = variant_or_usage(a.variant);
  cfg.n_cepstra = a.n_cepstra;
  const FeatureVector fv = extract_word(a.input, cfg);
  write_feature_file(fv, a.output);
  out << "wrote " << fv.entries.size() << " values (" << cfg.name << ") to " << a.output
      << "\n";
  return kExitOk;
}

struct CompareArgs {
  std::string variant;
  std::string manifest_a;
  std::string manifest_b;
  double threshold = kDefaultThreshold;
  std::string report;
};

int cmd_compare(const CompareArgs& a, std::ostream& out) {
  const VariantConfig cfg = variant_or_usage(a.variant);
  if (!(a.threshold > 0.0 && a.threshold <= 1.0)) {
    throw UsageError("--threshold must lie in (0, 1], got " + format_double(a.threshold));
  }
  const auto side_a = read_manifest(a.manifest_a);
  const auto side_b = read_manifest(a.manifest_b);
  std::map<std::string, std::filesystem::path> b_paths;
  for (const auto& e : side_b) b_paths.emplace(e.word_id, e.path);

  std::vector<WordPair> pairs;
  for (const auto& e : side_a) {
    const auto it = b_paths.find(e.word_id);
    if (it == b_paths.end()) continue;
    pairs.push_back({e.word_id, extract_word(e.path, cfg), extract_word(it->second, cfg)});
  }
  if (pairs.empty()) {
    throw Error(ErrorCode::kEmptyPairs, "manifests share no word ids");
  }
  const ComparisonReport report = compatibility(pairs, a.threshold);
  if (!a.report.empty()) write_file_atomic(a.report, format_report_csv(report));
  print_report_table(report, out);
  out << "compatibility=" << format_double(report.compatibility_percent) << "%\n";
  return kExitOk;
}

struct FiltersArgs {
  std::string variant;
  std::string out_dir;
  int points = 512;
};

int cmd_filters(const FiltersArgs& a, std::ostream& out) {
  const VariantConfig cfg = variant_or_usage(a.variant);
  std::error_code ec;
  std::filesystem::create_directories(a.out_dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + a.out_dir);
  const std::filesystem::path dir(a.out_dir);
  int written = 0;
  for (std::size_t i = 0; i < cfg.channels.size(); ++i) {
    const ChannelSpec& ch = cfg.channels[i];
    const std::string suffix = "ch" + std::to_string(i + 1) + ".csv";
    if (ch.fir_band) {
      const FirFilter f = design_bandpass(ch.fir_band->lo_hz, ch.fir_band->hi_hz,
                                          cfg.fir_taps, kPipelineRateHz);
      write_frequency_response_csv(dir / ("fir_" + suffix), frequency_response(f, a.points));
      ++written;
    }
    const MelFilterbank fb = build_filterbank(ch.mel_band.lo_hz, ch.mel_band.hi_hz,
                                              ch.n_filters, cfg.nfft, kPipelineRateHz);
    write_filterbank_csv(dir / ("melfb_" + suffix), fb);
    ++written;
  }
  out << "wrote " << written << " files to " << a.out_dir << "\n";
  return kExitOk;
}

struct SynthArgs {
  std::string kind;
  SynthParams params;
  std::optional<std::uint64_t> seed;
  std::string formants;
  std::string output;
};

int cmd_synth(SynthArgs a, std::ostream& out) {
  SignalKind kind;
  if (a.kind == "tone") {
    kind = SignalKind::kTone;
  } else if (a.kind == "vowel") {
    kind = SignalKind::kVowel;
  } else if (a.kind == "noise") {
    kind = SignalKind::kNoise;
  } else {
    throw UsageError("--kind must be tone, vowel or noise");
  }
  a.params.seed = a.seed;
  if (!a.formants.empty()) {
    a.params.formants_hz.clear();
    std::stringstream ss(a.formants);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto v = parse_double(item);
      if (!v) throw UsageError("bad formant list '" + a.formants + "'");
      a.params.formants_hz.push_back(*v);
    }
  }
  Waveform w({}, kPipelineRateHz);
  try {
    w = synth_signal(kind, a.params);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  write_wav(a.output, w);
  out << "wrote " << w.size() << " samples to " << a.output << "\n";
  return kExitOk;
}

}  // namespace

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const std::filesystem::path base = path.parent_path();
  std::vector<ManifestEntry> entries;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw Error(ErrorCode::kParseError, path.string() + ":" + std::to_string(line_no) +
                                              ": expected word_id<TAB>path");
    }
    std::string id = line.substr(0, tab);
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::kParseError, path.string() + ":" + std::to_string(line_no) +
                                              ": duplicate word id '" + id + "'");
    }
    std::filesystem::path p(line.substr(tab + 1));
    if (p.is_relative()) p = base / p;
    entries.push_back({std::move(id), std::move(p)});
  }
  return entries;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multichannel MFCC extraction and voice comparison"};
  app.require_subcommand(1);

  ExtractArgs ex;
  auto* extract_cmd = app.add_subcommand("extract", "Extract a feature file from a word WAV");
  extract_cmd->add_option("--variant", ex.variant, "M5FB, M2FB, M1FB or SCFB")->required();
  extract_cmd->add_option("--input", ex.input, "16-bit mono WAV at 8 or 16 kHz")->required();
  extract_cmd->add_option("--output", ex.output, "Feature file to write")->required();
  extract_cmd->add_option("--n-cepstra", ex.n_cepstra,
                          "Keep only the first n cepstra per channel (0 keeps all)")
      ->check(CLI::NonNegativeNumber);

  CompareArgs cmp;
  auto* compare_cmd = app.add_subcommand("compare", "Compare two word manifests");
  compare_cmd->add_option("--variant", cmp.variant, "M5FB, M2FB, M1FB or SCFB")->required();
  compare_cmd->add_option("--a", cmp.manifest_a, "First manifest")->required();
  compare_cmd->add_option("--b", cmp.manifest_b, "Second manifest")->required();
  compare_cmd->add_option("--threshold", cmp.threshold, "Identity threshold in (0, 1]");
  compare_cmd->add_option("--report", cmp.report, "CSV report path");

  FiltersArgs flt;
  auto* filters_cmd = app.add_subcommand("filters", "Dump FIR responses and mel filterbanks");
  filters_cmd->add_option("--variant", flt.variant, "M5FB, M2FB, M1FB or SCFB")->required();
  filters_cmd->add_option("--out", flt.out_dir, "Output directory")->required();
  filters_cmd->add_option("--points", flt.points, "Frequency response points")
      ->check(CLI::Range(2, 1 << 20));

  SynthArgs syn;
  auto* synth_cmd = app.add_subcommand("synth", "Write a synthetic 8 kHz test signal");
  synth_cmd->add_option("--kind", syn.kind, "tone, vowel or noise")->required();
  synth_cmd->add_option("--freq", syn.params.freq_hz, "Tone frequency (Hz)");
  synth_cmd->add_option("--f0", syn.params.f0_hz, "Vowel fundamental (Hz)");
  synth_cmd->add_option("--formants", syn.formants, "Vowel formants, comma separated (Hz)");
  synth_cmd->add_option("--bandwidth", syn.params.formant_bandwidth_hz,
                        "Formant bandwidth (Hz)");
  synth_cmd->add_option("--seed", syn.seed, "Noise seed");
  synth_cmd->add_option("--duration", syn.params.duration_s, "Seconds");
  synth_cmd->add_option("--amplitude", syn.params.amplitude, "Peak amplitude");
  synth_cmd->add_option("--out", syn.output, "WAV path")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*extract_cmd) return cmd_extract(ex, out);
    if (*compare_cmd) return cmd_compare(cmp, out);
    if (*filters_cmd) return cmd_filters(flt, out);
    if (*synth_cmd) return cmd_synth(syn, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace mcmfcc
