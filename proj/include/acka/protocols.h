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

#ifndef ACKA_PROTOCOLS_H_
#define ACKA_PROTOCOLS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "acka/adversary.h"
#include "acka/bitstring.h"
#include "acka/core.h"
#include "acka/ec.h"
#include "acka/hash.h"
#include "acka/netsim.h"
#include "acka/quantum.h"
#include "acka/rates.h"

namespace acka {

struct RunConfig {
  ProtocolKind protocol = ProtocolKind::kAcka;
  ProtocolParams params;
  PartyId sender{0};
  // Defaults to the m parties following the sender cyclically.
  std::optional<PartySet> receivers;
  // Defaults to DirectRates{params.q_x, params.q_z}.
  std::optional<NoiseModel> noise;
  AdversaryScript adversary;
  EcBackend ec_backend = EcBackend::kIdealized;
  std::size_t ec_block = 64;
  bool transcript = false;
  bool keep_broadcast_log = false;
  // TKD / bifully targets whose notification Alice suppresses.
  PartySet unnotified;
};

struct PartyView {
  PartyId id;
  Role role = NonParticipantRole{};
  BitString testing_key;  // as recovered by this party; empty if none
  BitString raw_key;      // error-corrected for Bobs
  std::optional<BitString> conference_key;
  bool v = false;         // verification flag raised by this party
  bool notified = false;  // TKD / bifully notification received
  bool ec_abort = false;  // aborted at the error-correction verdict
};

struct RunOutcome {
  ProtocolKind protocol = ProtocolKind::kAcka;
  PartyId sender;
  PartySet receivers;
  std::vector<PartyView> views;

  int collision_output = 0;
  bool id_abort = false;         // Gamma
  bool id_correct = false;       // Phi
  bool verification_abort = false;  // global abort after ID (fully / bifully)
  bool participants_ok = false;  // Omega_P
  bool participants_abort = false;  // Gamma_P
  bool keys_equal = false;
  std::string abort_reason;

  std::int64_t test_rounds = 0;
  double q_x_obs = 0.0;
  bool degenerate = false;       // no test rounds; Q_X^obs set to 0
  double threshold = 0.0;        // Q_X + gamma(Q_X)
  double observed_score = 0.0;   // Q_X^obs + gamma(Q_X^obs)
  int resamples = 0;
  std::int64_t raw_key_len = 0;
  double ell_raw = 0.0;
  std::int64_t ell = 0;
  std::int64_t ell_net = 0;

  CostReport ledger;
  std::map<std::string, std::int64_t> stage_private_bits;
  // Ones broadcast during each phase, visible to everybody.
  std::map<std::string, std::int64_t> public_ones;
  std::vector<std::int64_t> private_ones_received;
  std::vector<std::string> transcript;
  std::vector<BroadcastRecord> broadcast_log;
};

// Executes one seeded run. Throws ConfigError on invalid configuration.
RunOutcome RunProtocol(const RunConfig& config);

RunOutcome RunAcka(RunConfig config);
RunOutcome RunFullyAcka(RunConfig config);
RunOutcome RunBacka(RunConfig config);
RunOutcome RunBifullyAcka(RunConfig config);

// The m parties after `sender` in cyclic order.
PartySet DefaultReceivers(int n, int m, PartyId sender);

// omega_r of the XOR of all parties' X bits over the test rounds, each
// record holding one bit per party.
double EstimateQxObs(const std::vector<std::vector<Bit>>& test_round_records);

// Toeplitz compression of `raw` to `ell` bits. Throws std::domain_error
// ("no extractable key") when ell <= 0.
BitString PrivacyAmplify(const BitString& raw, const BeaconOutput& beacon,
                         std::int64_t ell);

// ACKA-ID d_t string: 1 | sender position | receiver flags of the other
// parties in ascending order, skipping the sender and t.
BitString EncodeIdentity(int n, PartyId sender, const PartySet& receivers,
                         PartyId t);
std::optional<InformedReceiverRole> DecodeIdentity(int n, const BitString& d,
                                                   PartyId t);

}  // namespace acka

#endif  // ACKA_PROTOCOLS_H_
