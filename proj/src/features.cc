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

#include "mcmfcc/features.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "mcmfcc/error.h"

namespace mcmfcc {

ChannelSummary summarize(const CepstralMatrix& c) {
  const Matrix& m = c.coeffs;
  if (m.rows() == 0 || m.cols() == 0) {
    throw Error(ErrorCode::kEmptyMatrix,
                "channel " + std::to_string(c.channel_index) + " has no frames");
  }
  const double l = static_cast<double>(m.rows());
  ChannelSummary s{c.channel_index, std::vector<CoefficientStats>(m.cols())};
  for (std::size_t k = 0; k < m.cols(); ++k) {
    CoefficientStats& st = s.coefficients[k];
    st.max = st.min = m(0, k);
    double sum = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      st.max = std::max(st.max, m(r, k));
      st.min = std::min(st.min, m(r, k));
      sum += m(r, k);
    }
    // Rounding can push the mean a hair outside [min, max] for near-constant
    // columns.
    st.mean = std::clamp(sum / l, st.min, st.max);
    double ss = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const double d = m(r, k) - st.mean;
      ss += d * d;
    }
    st.sd = std::sqrt(ss / l);
  }
  return s;
}

FeatureVector concat_summaries(std::vector<ChannelSummary> summaries,
                               const std::string& variant_name) {
  if (summaries.empty()) throw Error(ErrorCode::kMissingChannel, "no channel summaries");
  std::sort(summaries.begin(), summaries.end(),
            [](const ChannelSummary& a, const ChannelSummary& b) {
              return a.channel_index < b.channel_index;
            });
  FeatureVector fv{variant_name, {}, {}};
  for (std::size_t i = 0; i < summaries.size(); ++i) {
    const auto& s = summaries[i];
    if (s.channel_index != static_cast<int>(i) + 1) {
      throw Error(ErrorCode::kMissingChannel,
                  "expected channel " + std::to_string(i + 1) + ", found " +
                      std::to_string(s.channel_index));
    }
    fv.coefficient_counts.push_back(static_cast<int>(s.coefficients.size()));
    for (const auto& st : s.coefficients) {
      fv.entries.insert(fv.entries.end(), {st.max, st.min, st.mean, st.sd});
    }
  }
  return fv;
}

}  // namespace mcmfcc
