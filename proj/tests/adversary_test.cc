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

#include <gtest/gtest.h>

#include "acka/adversary.h"

namespace acka {
namespace {

AdversaryScript Script(std::initializer_list<const char*> specs, PartySet corrupt) {
  AdversaryScript s;
  s.corrupt = std::move(corrupt);
  for (const char* spec : specs) s.actions.push_back(ParseActionSpec(spec));
  return s;
}

TEST(ParseActionSpec, Fields) {
  auto a = ParseActionSpec("tamper-amd-offset:3:phase=id-transport:segment=2:index=5:length=9");
  EXPECT_EQ(a.kind, ActionKind::kTamperAmdOffset);
  EXPECT_EQ(a.party, PartyId(3));
  EXPECT_EQ(a.phase, Phase::kIdTransport);
  EXPECT_EQ(a.segment, 2);
  EXPECT_EQ(a.index, 5);
  EXPECT_EQ(a.length, 9);

  auto f = ParseActionSpec("report-fake-X-outcome:1:rate=0.25");
  EXPECT_EQ(f.phase, Phase::kTestParity);
  EXPECT_DOUBLE_EQ(f.rate, 0.25);

  EXPECT_EQ(ParseActionSpec("apply-as-second-sender:0:value=2").value, 2);
  EXPECT_EQ(ParseActionSpec("refuse-broadcast:2").segment, -1);
}

TEST(ParseActionSpec, Rejects) {
  for (const char* bad : {"", "flip-parity-input", "nope:1", "flip-parity-input:x",
                          "flip-parity-input:1:phase=moon", "flip-parity-input:1:index",
                          "flip-parity-input:1:colour=red", "flip-parity-input:1:index=q"}) {
    EXPECT_THROW(ParseActionSpec(bad), ConfigError) << bad;
  }
}

TEST(ActionNames, RoundTrip) {
  for (auto k : {ActionKind::kFlipParityInput, ActionKind::kRefuseBroadcast,
                 ActionKind::kApplyAsSecondSender, ActionKind::kTamperAmdOffset,
                 ActionKind::kReportFakeXOutcome}) {
    EXPECT_EQ(ParseAction(ActionName(k)), k);
  }
}

TEST(ValidateScript, Checks) {
  EXPECT_NO_THROW(ValidateScript(Script({"flip-parity-input:2"}, {PartyId(2)}), 4));
  EXPECT_THROW(ValidateScript(Script({"flip-parity-input:2"}, {PartyId(1)}), 4), ConfigError);
  EXPECT_THROW(ValidateScript(Script({}, {PartyId(4)}), 4), ConfigError);
  EXPECT_THROW(ValidateScript(Script({"flip-parity-input:1:length=0"}, {PartyId(1)}), 4),
               ConfigError);
  EXPECT_THROW(ValidateScript(Script({"report-fake-X-outcome:1:rate=1.5"}, {PartyId(1)}), 4),
               ConfigError);
  EXPECT_THROW(ValidateScript(Script({"report-fake-X-outcome:1:phase=ec-hash"}, {PartyId(1)}), 4),
               ConfigError);
  EXPECT_THROW(ValidateScript(Script({"apply-as-second-sender:1:value=3"}, {PartyId(1)}), 4),
               ConfigError);
}

TEST(ScriptedAdversary, FlipsOnlyInWindow) {
  ScriptedAdversary adv(
      Script({"flip-parity-input:1:phase=ec-hash:segment=0:index=2:length=3"}, {PartyId(1)}), 1);
  for (int seg : {0, 1}) {
    for (std::int64_t i = 0; i < 8; ++i) {
      std::vector<Bit> in(3, 0);
      PartySet refusing;
      adv.OnParity(Phase::kEcHash, seg, i, in, refusing);
      const bool hit = seg == 0 && i >= 2 && i < 5;
      EXPECT_EQ(in, (std::vector<Bit>{0, static_cast<Bit>(hit), 0}));
      EXPECT_TRUE(refusing.empty());
    }
  }
  std::vector<Bit> in(3, 0);
  PartySet refusing;
  adv.OnParity(Phase::kEcSyndrome, 0, 2, in, refusing);
  EXPECT_EQ(in, (std::vector<Bit>{0, 0, 0}));
  EXPECT_EQ(adv.interventions(), 3);
}

TEST(ScriptedAdversary, Refusal) {
  ScriptedAdversary adv(Script({"refuse-broadcast:2:phase=final-veto"}, {PartyId(2)}), 1);
  std::vector<Bit> in(4, 0);
  PartySet refusing;
  adv.OnParity(Phase::kFinalVeto, 0, 0, in, refusing);
  EXPECT_EQ(refusing, PartySet{PartyId(2)});
}

TEST(ScriptedAdversary, AmdOffsetIsNonzeroAndStable) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    ScriptedAdversary adv(
        Script({"tamper-amd-offset:0:phase=id-transport:length=6"}, {PartyId(0)}), seed);
    auto offset = [&](int seg) {
      int bits = 0;
      for (std::int64_t i = 0; i < 6; ++i) {
        std::vector<Bit> in(2, 0);
        PartySet r;
        adv.OnParity(Phase::kIdTransport, seg, i, in, r);
        bits |= in[0] << i;
      }
      return bits;
    };
    const int first = offset(1);
    EXPECT_NE(first, 0);
    EXPECT_EQ(offset(1), first);
  }
}

TEST(ScriptedAdversary, FakeXRate) {
  ScriptedAdversary adv(Script({"report-fake-X-outcome:1:rate=0.3"}, {PartyId(1)}), 9);
  int flips = 0;
  const int trials = 20000;
  for (int i = 0; i < trials; ++i) {
    std::vector<Bit> in(3, 0);
    PartySet r;
    adv.OnParity(Phase::kTestParity, 0, i, in, r);
    flips += in[1];
  }
  // 5 sigma around 0.3.
  EXPECT_NEAR(flips / double(trials), 0.3, 5 * std::sqrt(0.3 * 0.7 / trials));
}

TEST(ScriptedAdversary, ApplicantInput) {
  ScriptedAdversary adv(Script({"apply-as-second-sender:1:value=2", "flip-parity-input:3"},
                               {PartyId(1), PartyId(3)}),
                        1);
  EXPECT_EQ(adv.ApplicantInput(PartyId(1)), 2);
  EXPECT_EQ(adv.ApplicantInput(PartyId(3)), 0);
  EXPECT_EQ(adv.ApplicantInput(PartyId(0)), 0);
}

}  // namespace
}  // namespace acka
