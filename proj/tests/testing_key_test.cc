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

#include "acka/core.h"
#include "acka/testing_key.h"

namespace acka {
namespace {

BitString Bernoulli(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution d(p);
  BitString s(n);
  for (std::size_t i = 0; i < n; ++i) s.set(i, d(rng));
  return s;
}

TEST(ScheduleCoder, RoundTrip) {
  std::mt19937_64 rng(1);
  for (double p : {0.01, 0.05, 0.2, 0.5}) {
    ScheduleCoder coder(p);
    for (std::size_t n : {1u, 10u, 1000u, 5000u}) {
      BitString s = Bernoulli(n, p, rng);
      EXPECT_EQ(coder.Decode(coder.Encode(s), n), s) << p << " " << n;
    }
  }
}

TEST(ScheduleCoder, DecodeToleratesZeroPadding) {
  std::mt19937_64 rng(2);
  ScheduleCoder coder(0.1);
  BitString s = Bernoulli(800, 0.1, rng);
  BitString code = coder.Encode(s);
  code.resize(code.size() + 50);
  EXPECT_EQ(coder.Decode(code, 800), s);
}

TEST(ScheduleCoder, LengthNearEntropy) {
  std::mt19937_64 rng(3);
  const std::size_t n = 20000;
  for (double p : {0.02, 0.1}) {
    ScheduleCoder coder(p);
    double total = 0;
    for (int i = 0; i < 10; ++i) total += coder.Encode(Bernoulli(n, p, rng)).size();
    EXPECT_NEAR(total / 10, n * BinaryEntropy(p), 0.05 * n * BinaryEntropy(p));
  }
}

TEST(ScheduleCoder, DegenerateProbabilities) {
  ScheduleCoder zero(0.0), one(1.0);
  EXPECT_TRUE(zero.Decode(BitString{}, 10).is_zero());
  EXPECT_EQ(one.Decode(BitString{}, 10).weight(), 10u);
  EXPECT_THROW(ScheduleCoder(-0.1), std::invalid_argument);
}

TEST(DrawTestingKey, KeyHasBudgetLengthAndDecodes) {
  std::mt19937_64 rng(4);
  const std::size_t L = 3000;
  const double p = 0.05;
  const auto budget = static_cast<std::size_t>(std::ceil(L * BinaryEntropy(p)));
  ScheduleCoder coder(p);
  for (int i = 0; i < 30; ++i) {
    TestingKey k = DrawTestingKey(L, p, budget, rng);
    EXPECT_EQ(k.key.size(), budget);
    EXPECT_EQ(k.schedule.size(), L);
    EXPECT_EQ(coder.Decode(k.key, L), k.schedule);
    EXPECT_GE(k.resamples, 0);
  }
}

TEST(DrawTestingKey, ImpossibleBudgetThrows) {
  std::mt19937_64 rng(5);
  EXPECT_ANY_THROW(DrawTestingKey(1000, 0.3, 5, rng, 20));
}

}  // namespace
}  // namespace acka
