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

#include <random>

#include <gtest/gtest.h>

#include "acka/bitstring.h"
#include "acka/randomness.h"

namespace acka {
namespace {

TEST(BitString, BasicOps) {
  BitString a{1, 0, 1, 1};
  EXPECT_EQ(a.size(), 4u);
  EXPECT_EQ(a.weight(), 3u);
  EXPECT_EQ(a.ToString(), "1011");
  EXPECT_EQ(BitString::FromString("1011"), a);
  EXPECT_EQ(a.slice(1, 2), (BitString{0, 1}));
  BitString b{1, 1, 0, 1};
  EXPECT_EQ(a ^ b, (BitString{0, 1, 1, 0}));
  EXPECT_TRUE((a ^ a).is_zero());
}

TEST(BitString, UintRoundTrip) {
  for (std::uint64_t v : {0ull, 1ull, 5ull, 0xdeadbeefull}) {
    EXPECT_EQ(BitString::FromUint(v, 40).ToUint(), v);
  }
}

TEST(BitString, PackUnpack) {
  std::mt19937_64 rng(3);
  for (std::size_t len : {0u, 1u, 63u, 64u, 65u, 200u}) {
    BitString s = BitString::Random(len, rng);
    EXPECT_EQ(BitString::Unpack(s.Pack(), len), s);
  }
}

TEST(BitString, AppendResize) {
  BitString s{1};
  s.append(BitString{0, 1});
  s.resize(5);
  EXPECT_EQ(s.ToString(), "10100");
}

TEST(Randomness, DeriveSeedDeterministicAndSpread) {
  EXPECT_EQ(DeriveSeed(1, 2), DeriveSeed(1, 2));
  EXPECT_NE(DeriveSeed(1, 2), DeriveSeed(1, 3));
  EXPECT_NE(DeriveSeed(1, 2), DeriveSeed(2, 2));
}

TEST(Randomness, StreamsIndependentAndReproducible) {
  auto a = MakeEngine(9, Stream::kBeacon);
  auto b = MakeEngine(9, Stream::kBeacon);
  auto c = MakeEngine(9, Stream::kSource);
  EXPECT_EQ(a(), b());
  EXPECT_NE(MakeEngine(9, Stream::kBeacon)(), c());
}

TEST(Randomness, PartyTapeRoughlyFair) {
  PartyRandomness tape(3, 42);
  int ones = 0;
  for (int i = 0; i < 20000; ++i) ones += tape.Draw(PartyId(i % 3));
  EXPECT_NEAR(ones / 20000.0, 0.5, 0.02);
}

TEST(Randomness, ScriptedTapeReplaysPattern) {
  ScriptedTape t = ScriptedTape::FromPattern(0b1101, 4);
  EXPECT_EQ(t.Draw(PartyId(0)), 1);
  EXPECT_EQ(t.Draw(PartyId(2)), 0);
  EXPECT_EQ(t.Draw(PartyId(1)), 1);
  EXPECT_EQ(t.Draw(PartyId(1)), 1);
  EXPECT_EQ(t.consumed(), 4u);
}

}  // namespace
}  // namespace acka
