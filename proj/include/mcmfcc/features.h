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

#ifndef MCMFCC_FEATURES_H_
#define MCMFCC_FEATURES_H_

#include <string>
#include <vector>

#include "mcmfcc/cepstrum.h"

namespace mcmfcc {

// Order of the four statistics inside a FeatureVector.
enum class Stat { kMax = 0, kMin = 1, kMean = 2, kSd = 3 };
inline constexpr int kStatsPerCoefficient = 4;

struct CoefficientStats {
  double max = 0.0;
  double min = 0.0;
  double mean = 0.0;
  double sd = 0.0;  // population (divide by L)
  friend bool operator==(const CoefficientStats&,
                         const CoefficientStats&) = default;
};

struct ChannelSummary {
  int channel_index = 1;
  std::vector<CoefficientStats> coefficients;
};

// Entries are laid out channel-major, then coefficient, then
// (max, min, mean, sd). coefficient_counts[i] is the number of cepstral
// coefficients summarised for channel i+1.
struct FeatureVector {
  std::string variant_name;
  std::vector<int> coefficient_counts;
  std::vector<double> entries;

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

// Per-coefficient statistics over frames.
ChannelSummary summarize(const CepstralMatrix& c);

// Channel indices must be exactly 1..n (in any input order); output is in
// ascending channel order.
FeatureVector concat_summaries(std::vector<ChannelSummary> summaries,
                               const std::string& variant_name);

}  // namespace mcmfcc

#endif  // MCMFCC_FEATURES_H_
