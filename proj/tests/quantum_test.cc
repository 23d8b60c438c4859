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
#include "acka/quantum.h"

namespace acka {
namespace {

// P(outcome) for all-Z measurement of a GHZ state with i.i.d. bit flips:
// a uniform common bit c, each party reading c xor f_t.
std::vector<double> ZOracle(int n, double q_bit) {
  std::vector<double> d(std::size_t{1} << n, 0.0);
  for (std::size_t idx = 0; idx < d.size(); ++idx) {
    for (int c = 0; c < 2; ++c) {
      double pr = 0.5;
      for (int t = 0; t < n; ++t) pr *= (((idx >> t) & 1) != static_cast<std::size_t>(c)) ? q_bit : 1 - q_bit;
      d[idx] += pr;
    }
  }
  return d;
}

// All-X: uniform over outcomes of each parity, odd parity with probability
// (1 - (1 - 2 q_phase)^n) / 2.
std::vector<double> XOracle(int n, double q_phase) {
  const double odd = (1 - std::pow(1 - 2 * q_phase, n)) / 2;
  std::vector<double> d(std::size_t{1} << n);
  for (std::size_t idx = 0; idx < d.size(); ++idx) {
    d[idx] = (__builtin_popcountll(idx) % 2 ? odd : 1 - odd) / (d.size() / 2);
  }
  return d;
}

TEST(EffectiveRates, PauliFormulas) {
  auto r = EffectiveRates(PauliPerQubit{0.01, 0.03}, 5);
  EXPECT_NEAR(r.q_x, (1 - std::pow(0.98, 5)) / 2, 1e-15);
  EXPECT_NEAR(r.q_z, 2 * 0.03 * 0.97, 1e-15);
  auto d = EffectiveRates(DirectRates{0.02, 0.04}, 5);
  EXPECT_EQ(d.q_x, 0.02);
  EXPECT_EQ(d.q_z, 0.04);
}

TEST(ValidateNoise, Ranges) {
  EXPECT_THROW(ValidateNoise(DirectRates{0.5, 0.0}), ConfigError);
  EXPECT_THROW(ValidateNoise(PauliPerQubit{0.0, -0.1}), ConfigError);
  EXPECT_NO_THROW(ValidateNoise(PauliPerQubit{0.1, 0.1}));
}

TEST(JointDistributionOracle, MatchesIndependentOracles) {
  for (int n : {2, 3, 4}) {
    auto z = JointDistributionOracle(n, PauliPerQubit{0.0, 0.07}, std::vector<Basis>(n, Basis::kZ));
    auto x = JointDistributionOracle(n, PauliPerQubit{0.06, 0.0}, std::vector<Basis>(n, Basis::kX));
    auto zo = ZOracle(n, 0.07), xo = XOracle(n, 0.06);
    for (std::size_t i = 0; i < z.size(); ++i) {
      EXPECT_NEAR(z[i], zo[i], 1e-12);
      EXPECT_NEAR(x[i], xo[i], 1e-12);
    }
  }
}

TEST(JointDistributionOracle, SumsToOneForMixedBases) {
  auto d = JointDistributionOracle(4, DirectRates{0.1, 0.05},
                                   {Basis::kZ, Basis::kX, Basis::kZ, Basis::kZ});
  double s = 0;
  for (double v : d) s += v;
  EXPECT_NEAR(s, 1.0, 1e-12);
}

TEST(Sampler, MatchesOracleFrequencies) {
  std::mt19937_64 rng(11);
  const int trials = 200000;
  for (const NoiseModel& noise : {NoiseModel{DirectRates{0.1, 0.2}}, NoiseModel{PauliPerQubit{0.05, 0.1}}}) {
    for (const auto& bases : {std::vector<Basis>{Basis::kX, Basis::kX, Basis::kX},
                              std::vector<Basis>{Basis::kZ, Basis::kZ, Basis::kZ},
                              std::vector<Basis>{Basis::kZ, Basis::kX, Basis::kZ}}) {
      auto want = JointDistributionOracle(3, noise, bases);
      std::vector<double> got(8, 0.0);
      for (int i = 0; i < trials; ++i) {
        auto o = SampleDetectedOutcomes(noise, bases, rng);
        got[o[0] | o[1] << 1 | o[2] << 2] += 1.0 / trials;
      }
      for (int i = 0; i < 8; ++i) {
        const double sigma = std::sqrt(want[i] * (1 - want[i]) / trials);
        EXPECT_NEAR(got[i], want[i], 5 * sigma + 1e-9);
      }
    }
  }
}

TEST(Sampler, DetectionProbabilityIsEtaToTheN) {
  std::mt19937_64 rng(12);
  const double eta = 0.8;
  const int n = 4, trials = 100000;
  int detected = 0;
  for (int i = 0; i < trials; ++i) {
    detected += SampleGhzRound(n, eta, DirectRates{}, std::vector<Basis>(n, Basis::kZ), rng).detected;
  }
  const double p = std::pow(eta, n);
  EXPECT_NEAR(detected / double(trials), p, 5 * std::sqrt(p * (1 - p) / trials));
}

TEST(AttemptsUntilDetected, GeometricMean) {
  std::mt19937_64 rng(13);
  double sum = 0;
  const int trials = 50000;
  for (int i = 0; i < trials; ++i) {
    auto a = AttemptsUntilDetected(0.25, rng);
    ASSERT_GE(a, 1);
    sum += a;
  }
  EXPECT_NEAR(sum / trials, 4.0, 0.1);
  EXPECT_EQ(AttemptsUntilDetected(1.0, rng), 1);
}

TEST(BellSecretBitSupply, Formula) {
  const double h = BinaryEntropy(0.02);
  EXPECT_NEAR(BellSecretBitSupply(5, 1.0, 0.02, 0.02), 2 * (1 - 2 * h), 1e-15);
  EXPECT_NEAR(BellSecretBitSupply(8, 0.5, 0.02, 0.02), 4 * 0.25 * (1 - 2 * h), 1e-15);
  EXPECT_EQ(BellSecretBitSupply(5, 1.0, 0.12, 0.12), 0.0);
}

}  // namespace
}  // namespace acka
