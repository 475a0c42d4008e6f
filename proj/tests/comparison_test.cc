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

#include <algorithm>
#include <random>
#include <sstream>

#include "mcmfcc/comparison.h"
#include "mcmfcc/error.h"

namespace mcmfcc {
namespace {

FeatureVector fv(std::vector<double> v, std::string variant = "SCFB") {
  return {std::move(variant), {static_cast<int>(v.size() / 4)}, std::move(v)};
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an mcmfcc::Error");
  return ErrorCode::kIoError;
}

TEST_CASE("similarity") {
  const FeatureVector a = fv({1, 2, 3, 4});
  CHECK(similarity(a, a) == doctest::Approx(1.0));
  CHECK(similarity(fv({1, 0, 0, 0}), fv({0, 1, 0, 0})) == 0.0);
  CHECK(similarity(a, fv({2, 4, 6, 8})) == doctest::Approx(1.0));
  CHECK(similarity(a, fv({-1, -2, -3, -4})) == doctest::Approx(-1.0));
  CHECK(similarity(fv({0, 0, 0, 0}), fv({0, 0, 0, 0})) == 1.0);
  CHECK(similarity(fv({0, 0, 0, 0}), a) == 0.0);

  CHECK(code_of([&] { similarity(a, fv({1, 2, 3, 4, 5, 6, 7, 8})); }) ==
        ErrorCode::kLengthMismatch);
  CHECK(code_of([&] { similarity(a, fv({1, 2, 3, 4}, "M5FB")); }) ==
        ErrorCode::kVariantMismatch);
}

TEST_CASE("similarity is symmetric and scale invariant") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> dist;
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> x(8);
    std::vector<double> y(8);
    for (auto& v : x) v = dist(rng);
    for (auto& v : y) v = dist(rng);
    const double s = similarity(fv(x), fv(y));
    CHECK(s >= -1.0);
    CHECK(s <= 1.0);
    CHECK(similarity(fv(y), fv(x)) == doctest::Approx(s).epsilon(1e-12));
    const double c = scale(rng);
    for (auto& v : x) v *= c;
    CHECK(similarity(fv(x), fv(y)) == doctest::Approx(s).epsilon(1e-12));
  }
}

TEST_CASE("decide_identity") {
  CHECK(decide_identity(0.99, 0.95));
  CHECK(decide_identity(0.95, 0.95));
  CHECK_FALSE(decide_identity(0.50, 0.95));
  CHECK(decide_identity(1.0, 1.0));
  CHECK(code_of([] { decide_identity(0.5, 0.0); }) == ErrorCode::kInvalidThreshold);
  CHECK(code_of([] { decide_identity(0.5, 1.5); }) == ErrorCode::kInvalidThreshold);

  // Monotone in similarity for a fixed threshold.
  bool seen_true = false;
  for (double s = -1.0; s <= 1.0; s += 0.01) {
    const bool d = decide_identity(s, 0.8);
    if (seen_true) CHECK(d);
    seen_true = seen_true || d;
  }
}

std::vector<WordPair> pairs_with_matches(int total, int matches) {
  std::vector<WordPair> pairs;
  for (int i = 0; i < total; ++i) {
    const FeatureVector a = fv({1, 0, 0, 0});
    const FeatureVector b = i < matches ? a : fv({0, 1, 0, 0});
    pairs.push_back({"w" + std::to_string(i), a, b});
  }
  return pairs;
}

TEST_CASE("compatibility") {
  const ComparisonReport r = compatibility(pairs_with_matches(20, 17));
  CHECK(r.compatibility_percent == 85.0);
  CHECK(r.words.size() == 20);
  CHECK(r.variant_name == "SCFB");
  CHECK(r.threshold == 0.95);
  CHECK(compatibility(pairs_with_matches(20, 20)).compatibility_percent == 100.0);
  CHECK(compatibility(pairs_with_matches(20, 0)).compatibility_percent == 0.0);

  auto shuffled = pairs_with_matches(20, 13);
  std::mt19937_64 rng(1);
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  CHECK(compatibility(shuffled).compatibility_percent == 65.0);

  CHECK(code_of([] { compatibility({}); }) == ErrorCode::kEmptyPairs);
  CHECK(code_of([] { compatibility(pairs_with_matches(2, 1), 1.5); }) ==
        ErrorCode::kInvalidThreshold);
  auto mixed = pairs_with_matches(2, 1);
  mixed[1].feature_a.variant_name = mixed[1].feature_b.variant_name = "M5FB";
  CHECK(code_of([&] { compatibility(mixed); }) == ErrorCode::kVariantMismatch);
}

TEST_CASE("self-comparison is 100% at any threshold") {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> dist;
  std::vector<WordPair> pairs;
  for (int i = 0; i < 20; ++i) {
    std::vector<double> v(88);
    for (auto& x : v) x = dist(rng);
    pairs.push_back({"w" + std::to_string(i), fv(v), fv(v)});
  }
  for (double t : {0.01, 0.5, 0.95, 1.0}) {
    CHECK(compatibility(pairs, t).compatibility_percent == 100.0);
  }
}

TEST_CASE("report rendering") {
  const ComparisonReport r = compatibility(pairs_with_matches(2, 1));
  CHECK(format_report_csv(r) ==
        "word_id,similarity,match\nw0,1,1\nw1,0,0\n#compatibility_percent=50\n");
  std::ostringstream table;
  print_report_table(r, table);
  CHECK(table.str().find("w1") != std::string::npos);
  CHECK(table.str().find("no") != std::string::npos);
}

}  // namespace
}  // namespace mcmfcc
