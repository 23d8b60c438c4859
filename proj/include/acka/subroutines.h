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

#ifndef ACKA_SUBROUTINES_H_
#define ACKA_SUBROUTINES_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "acka/bitstring.h"
#include "acka/core.h"
#include "acka/netsim.h"
#include "acka/randomness.h"

namespace acka {

// Named interception points for dishonest behaviour. Each sub-protocol
// invocation runs inside one phase; `segment` distinguishes repeated
// invocations (target party, TKD iteration, ...).
enum class Phase {
  kNone,
  kCollisionVetoA,
  kCollisionVetoB,
  kIdTransport,
  kIdVeto,
  kTkdNotification,
  kTkdDistribution,
  kKeyReveal,
  kTestParity,
  kVerificationVeto,
  kEcSyndrome,
  kEcHash,
  kEcVerdict,
  kBifullyNotification,
  kBifullyDistribution,
  kFinalVeto,
};

const char* PhaseName(Phase phase);

// Called before every Parity round with the honest inputs. May rewrite the
// inputs of corrupt parties and add corrupt parties to `refusing`.
class ParityHook {
 public:
  virtual ~ParityHook() = default;
  virtual void OnParity(Phase phase, int segment, std::int64_t index,
                        std::vector<Bit>& inputs, PartySet& refusing) = 0;
};

// Per-run plumbing shared by every sub-protocol call.
struct SubprotocolContext {
  ChannelFabric* fabric = nullptr;
  RandomTape* tape = nullptr;
  ParityHook* hook = nullptr;
  Phase phase = Phase::kNone;
  int segment = 0;
  std::int64_t index = 0;

  void Enter(Phase p, int seg = 0) {
    phase = p;
    segment = seg;
    index = 0;
  }
  int n() const { return fabric->n(); }
};

struct ParityOptions {
  std::optional<PartyId> last_broadcaster;
  // Silent variant: this party does not broadcast and is the only one able
  // to compute the result.
  std::optional<PartyId> silent_party;
};

struct ParityResult {
  // outputs[t] is nullopt for parties that cannot compute the parity.
  std::vector<std::optional<Bit>> outputs;
  // Some party refused to broadcast; its missing z bit counts as 0.
  bool refused = false;
};

// One Parity round: n(n-1) single-bit private sends, then n (or n-1)
// single-bit broadcasts in ascending order, with optional last broadcaster.
ParityResult ParityRound(SubprotocolContext& ctx, std::vector<Bit> inputs,
                         const ParityOptions& options = {});

// Runs Parity once per bit position. inputs[t] must all have equal length.
// Returns the common output string; sets *refused when any round saw a
// refusal.
BitString ParityString(SubprotocolContext& ctx,
                       const std::vector<BitString>& inputs,
                       bool* refused = nullptr);

struct VetoResult {
  Bit output = 0;
  // For parties with input 1: some Parity outcome differed from their own q.
  std::vector<bool> collision_seen;
};

// n * r_v Parity rounds, each with a designated last broadcaster; always run
// to completion. Output 1 on any outcome 1 or any refusal.
VetoResult Veto(SubprotocolContext& ctx, const std::vector<Bit>& inputs,
                int r_v);

// Inputs in {0,1,2}; returns 0 (no applicant), 1 (single applicant) or 2
// (collision).
int CollisionDetection(SubprotocolContext& ctx, const std::vector<int>& inputs,
                       int r_v);

// Notification sweep used by TKD and bifully-ACKA: r_n silent Parity rounds
// per party. Returns y_t per party; only party t's own flag is meaningful to t.
// With `suppress` Alice inputs 0 throughout and the target is never notified.
std::vector<Bit> Notify(SubprotocolContext& ctx, PartyId alice, PartyId target,
                        int r_n, bool suppress = false);

}  // namespace acka

#endif  // ACKA_SUBROUTINES_H_
