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

#ifndef MCMFCC_COMPARISON_H_
#define MCMFCC_COMPARISON_H_

#include <ostream>
#include <string>
#include <vector>

#include "mcmfcc/features.h"

namespace mcmfcc {

inline constexpr double kDefaultThreshold = 0.95;

struct WordPair {
  std::string word_id;
  FeatureVector feature_a;
  FeatureVector feature_b;
};

// Cosine similarity. Two zero vectors compare as 1, one zero vector as 0.
double similarity(const FeatureVector& a, const FeatureVector& b);

// similarity >= threshold; threshold must lie in (0, 1].
bool decide_identity(double similarity, double threshold);

struct WordResult {
  std::string word_id;
  double similarity;
  bool match;
};

struct ComparisonReport {
  std::string variant_name;
  double threshold = kDefaultThreshold;
  std::vector<WordResult> words;
  double compatibility_percent = 0.0;
};

ComparisonReport compatibility(const std::vector<WordPair>& pairs,
                               double threshold = kDefaultThreshold);

// `word_id,similarity,match` rows, then `#compatibility_percent=<v>`.
std::string format_report_csv(const ComparisonReport& report);

void print_report_table(const ComparisonReport& report, std::ostream& out);

}  // namespace mcmfcc

#endif  // MCMFCC_COMPARISON_H_
