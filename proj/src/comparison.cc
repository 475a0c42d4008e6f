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

#include "mcmfcc/comparison.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "mcmfcc/error.h"
#include "mcmfcc/text_io.h"

namespace mcmfcc {

double similarity(const FeatureVector& a, const FeatureVector& b) {
  if (a.variant_name != b.variant_name) {
    throw Error(ErrorCode::kVariantMismatch, a.variant_name + " vs " + b.variant_name);
  }
  if (a.entries.size() != b.entries.size()) {
    throw Error(ErrorCode::kLengthMismatch, std::to_string(a.entries.size()) + " vs " +
                                                std::to_string(b.entries.size()));
  }
  double dot = 0.0;
  double norm_a = 0.0;
  double norm_b = 0.0;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    dot += a.entries[i] * b.entries[i];
    norm_a += a.entries[i] * a.entries[i];
    norm_b += b.entries[i] * b.entries[i];
  }
  if (norm_a == 0.0 && norm_b == 0.0) return 1.0;
  if (norm_a == 0.0 || norm_b == 0.0) return 0.0;
  // sqrt(n * n) == n exactly in IEEE arithmetic, so identical vectors give
  // exactly 1 and pass a threshold of 1.
  const double cos = dot / std::sqrt(norm_a * norm_b);
  return std::clamp(cos, -1.0, 1.0);
}

bool decide_identity(double similarity, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidThreshold, format_double(threshold) + " not in (0, 1]");
  }
  return similarity >= threshold;
}

ComparisonReport compatibility(const std::vector<WordPair>& pairs, double threshold) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyPairs, "no word pairs to compare");
  // Validate up front so an invalid threshold fails even for mismatched pairs.
  decide_identity(1.0, threshold);
  ComparisonReport report;
  report.variant_name = pairs.front().feature_a.variant_name;
  report.threshold = threshold;
  std::size_t matches = 0;
  for (const WordPair& p : pairs) {
    if (p.feature_a.variant_name != report.variant_name ||
        p.feature_b.variant_name != report.variant_name) {
      throw Error(ErrorCode::kVariantMismatch,
                  "word '" + p.word_id + "' is not " + report.variant_name);
    }
    const double s = similarity(p.feature_a, p.feature_b);
    const bool match = decide_identity(s, threshold);
    matches += match ? 1 : 0;
    report.words.push_back({p.word_id, s, match});
  }
  report.compatibility_percent =
      100.0 * static_cast<double>(matches) / static_cast<double>(pairs.size());
  return report;
}

std::string format_report_csv(const ComparisonReport& report) {
  std::string out = "word_id,similarity,match\n";
  for (const auto& w : report.words) {
    out += w.word_id + "," + format_double(w.similarity) + "," + (w.match ? "1" : "0") + "\n";
  }
  out += "#compatibility_percent=" + format_double(report.compatibility_percent) + "\n";
  return out;
}

void print_report_table(const ComparisonReport& report, std::ostream& out) {
  std::size_t width = 7;
  for (const auto& w : report.words) width = std::max(width, w.word_id.size());
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-*s  %10s  %s\n", static_cast<int>(width), "word_id",
                "similarity", "match");
  out << "variant " << report.variant_name << ", threshold "
      << format_double(report.threshold) << "\n"
      << buf;
  for (const auto& w : report.words) {
    std::snprintf(buf, sizeof(buf), "%-*s  %10.6f  %s\n", static_cast<int>(width),
                  w.word_id.c_str(), w.similarity, w.match ? "yes" : "no");
    out << buf;
  }
}

}  // namespace mcmfcc
