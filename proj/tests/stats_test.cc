// Copyright 2026 The ACKA Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "acka/stats.h"

namespace acka {
namespace {

TEST(KolmogorovQ, KnownValues) {
  EXPECT_DOUBLE_EQ(KolmogorovQ(0.0), 1.0);
  // Classic critical values of the limiting distribution.
  EXPECT_NEAR(KolmogorovQ(1.3581), 0.05, 1e-4);
  EXPECT_NEAR(KolmogorovQ(1.6276), 0.01, 1e-4);
  EXPECT_NEAR(KolmogorovQ(1.2238), 0.10, 1e-4);
  EXPECT_LT(KolmogorovQ(5.0), 1e-20);
  // Both series agree where they meet.
  EXPECT_NEAR(KolmogorovQ(1.1799999), KolmogorovQ(1.1800001), 1e-6);
  double prev = 1.0;
  for (double l = 0.05; l < 3; l += 0.05) {
    EXPECT_LE(KolmogorovQ(l), prev);
    prev = KolmogorovQ(l);
  }
}

TEST(KsStatistic, HandComputed) {
  EXPECT_DOUBLE_EQ(KsStatistic({1, 2, 3}, {1, 2, 3}), 0.0);
  EXPECT_DOUBLE_EQ(KsStatistic({1, 2}, {3, 4}), 1.0);
  EXPECT_DOUBLE_EQ(KsStatistic({1, 2, 3, 4}, {3, 4, 5, 6}), 0.5);
  // Ties across samples are stepped together.
  EXPECT_DOUBLE_EQ(KsStatistic({0, 0, 1, 1}, {0, 1, 1, 1}), 0.25);
  EXPECT_THROW(KsStatistic({}, {1}), std::invalid_argument);
}

TEST(KsTwoSample, SameDistributionIsNotRejected) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  int rejections = 0;
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<double> a(300), b(300);
    for (auto& x : a) x = g(rng);
    for (auto& x : b) x = g(rng);
    rejections += KsTwoSamplePValue(a, b) < 0.05;
  }
  // Nominal 5%; 200 trials.
  EXPECT_LT(rejections, 25);
}

TEST(KsTwoSample, ShiftIsDetected) {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> g;
  std::vector<double> a(500), b(500);
  for (auto& x : a) x = g(rng);
  for (auto& x : b) x = g(rng) + 0.5;
  EXPECT_LT(KsTwoSamplePValue(a, b), 1e-6);
}

}  // namespace
}  // namespace acka
