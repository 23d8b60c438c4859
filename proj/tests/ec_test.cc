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
#include "acka/ec.h"
#include "acka/netsim.h"

namespace acka {
namespace {

TEST(Ec, SyndromeLength) {
  EXPECT_EQ(SyndromeLength(19000, 0.02), static_cast<std::size_t>(std::ceil(19000 * BinaryEntropy(0.02))));
  EXPECT_EQ(SyndromeLength(100, 0.0), 0u);
}

TEST(Ec, BackendNames) {
  EXPECT_EQ(ParseEcBackend("idealized"), EcBackend::kIdealized);
  EXPECT_EQ(ParseEcBackend("linear"), EcBackend::kLinearBlock);
  EXPECT_STREQ(EcBackendName(EcBackend::kLinearBlock), "linear");
  EXPECT_THROW(ParseEcBackend("ldpc"), ConfigError);
}

TEST(Ec, IdealizedRecoversOnMatchingSyndrome) {
  ChannelFabric f(3, 1);
  std::mt19937_64 rng(1);
  BitString a = BitString::Random(500, rng), b = a;
  for (int i : {3, 77, 400}) b.flip(i);
  auto ec = MakeCorrector(EcBackend::kIdealized, f, 500, 60, 64);
  BitString s = ec->Syndrome(a);
  EXPECT_EQ(s.size(), 60u);
  auto fixed = ec->Correct(b, s);
  ASSERT_TRUE(fixed);
  EXPECT_EQ(*fixed, a);
  BitString tampered = s;
  tampered.flip(0);
  auto unchanged = ec->Correct(b, tampered);
  ASSERT_TRUE(unchanged);
  EXPECT_EQ(*unchanged, b);
}

TEST(Ec, LinearBlockCorrectsSparseErrors) {
  ChannelFabric f(3, 2);
  std::mt19937_64 rng(2);
  const std::size_t len = 640, block = 64;
  auto ec = MakeCorrector(EcBackend::kLinearBlock, f, len, 10 * 24, block);
  BitString a = BitString::Random(len, rng);
  BitString s = ec->Syndrome(a);
  EXPECT_EQ(s.size(), 240u);
  for (int trial = 0; trial < 20; ++trial) {
    BitString b = a;
    for (std::size_t blk = 0; blk < len / block; ++blk) {
      if (rng() % 2) b.flip(blk * block + rng() % block);
    }
    auto fixed = ec->Correct(b, s);
    ASSERT_TRUE(fixed);
    EXPECT_EQ(*fixed, a);
  }
}

TEST(Ec, LinearBlockReportsFailureOnDenseErrors) {
  ChannelFabric f(3, 3);
  std::mt19937_64 rng(3);
  auto ec = MakeCorrector(EcBackend::kLinearBlock, f, 64, 12, 64);
  BitString a = BitString::Random(64, rng);
  BitString s = ec->Syndrome(a);
  int failures = 0;
  for (int trial = 0; trial < 50; ++trial) {
    BitString b = a ^ BitString::Random(64, rng);
    auto fixed = ec->Correct(b, s);
    if (!fixed || *fixed != a) ++failures;
  }
  EXPECT_GT(failures, 40);
}

}  // namespace
}  // namespace acka
