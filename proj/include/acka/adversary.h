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

#ifndef ACKA_ADVERSARY_H_
#define ACKA_ADVERSARY_H_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "acka/bitstring.h"
#include "acka/core.h"
#include "acka/subroutines.h"

namespace acka {

enum class ActionKind {
  kFlipParityInput,
  kRefuseBroadcast,
  kApplyAsSecondSender,
  kTamperAmdOffset,
  kReportFakeXOutcome,
};

const char* ActionName(ActionKind kind);
ActionKind ParseAction(const std::string& name);

// One scripted deviation by a corrupt party. Parity-level actions fire for
// rounds `index .. index + length - 1` of invocations of `phase` whose
// segment equals `segment` (-1 matches every segment).
struct AdversaryAction {
  ActionKind kind = ActionKind::kFlipParityInput;
  PartyId party;
  Phase phase = Phase::kNone;
  int segment = -1;
  std::int64_t index = 0;
  std::int64_t length = 1;
  double rate = 1.0;  // report-fake-X-outcome: flip probability per test round
  int value = 1;      // apply-as-second-sender: collision input, 1 or 2
};

struct AdversaryScript {
  PartySet corrupt;
  std::vector<AdversaryAction> actions;

  bool empty() const { return actions.empty(); }
};

// Throws ConfigError if an action names an honest or unknown party.
void ValidateScript(const AdversaryScript& script, int n);

// Parses "kind:party[:key=value...]" with keys phase, segment, index,
// length, rate, value.
AdversaryAction ParseActionSpec(const std::string& spec);

class ScriptedAdversary final : public ParityHook {
 public:
  ScriptedAdversary(AdversaryScript script, std::uint64_t seed);

  void OnParity(Phase phase, int segment, std::int64_t index,
                std::vector<Bit>& inputs, PartySet& refusing) override;

  // Collision Detection input a corrupt party submits in identity
  // designation (0 when it does not apply).
  int ApplicantInput(PartyId who) const;
  const AdversaryScript& script() const { return script_; }
  std::int64_t interventions() const { return interventions_; }

 private:
  const BitString& Offset(std::size_t action, int segment);

  AdversaryScript script_;
  std::mt19937_64 rng_;
  std::map<std::pair<std::size_t, int>, BitString> offsets_;
  std::int64_t interventions_ = 0;
};

}  // namespace acka

#endif  // ACKA_ADVERSARY_H_
