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

#ifndef ACKA_NETSIM_H_
#define ACKA_NETSIM_H_

#include <cstdint>
#include <deque>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "acka/bitstring.h"
#include "acka/core.h"

namespace acka {

struct CostReport {
  std::int64_t ghz_network_uses = 0;    // source attempts, lost rounds included
  std::int64_t ghz_detected = 0;
  std::int64_t bell_network_uses = 0;   // filled in by the rates module
  std::int64_t private_bits_consumed = 0;
  std::int64_t private_channel_uses = 0;
  std::int64_t broadcast_bits = 0;
  std::int64_t parity_rounds = 0;
  std::int64_t key_pool_bits = 0;       // pre-shared conference key bits used

  std::int64_t network_uses() const {
    return ghz_network_uses + bell_network_uses;
  }
  bool operator==(const CostReport&) const = default;
};

// Monotone counters. There is no way to decrement.
class CostLedger {
 public:
  void AddPrivate(std::int64_t bits) {
    report_.private_bits_consumed += bits;
    report_.private_channel_uses += bits;
  }
  void AddBroadcast(std::int64_t bits) { report_.broadcast_bits += bits; }
  void AddParityRound() { ++report_.parity_rounds; }
  void AddGhz(std::int64_t attempts, std::int64_t detected) {
    report_.ghz_network_uses += attempts;
    report_.ghz_detected += detected;
  }
  void AddKeyPool(std::int64_t bits) { report_.key_pool_bits += bits; }

  CostReport Snapshot() const { return report_; }

 private:
  CostReport report_;
};

struct BroadcastRecord {
  std::int64_t round = 0;
  PartyId sender;
  std::optional<BitString> payload;  // nullopt records a refusal

  bool refused() const { return !payload.has_value(); }
  bool operator==(const BroadcastRecord&) const = default;
};

struct BeaconOutput {
  std::size_t in_len = 0;
  std::size_t out_len = 0;
  BitString hash_seed;  // in_len + out_len - 1 bits
};

class ChannelFabric;

// What one party can see: its own inbox and the public broadcast log.
class PartyChannel {
 public:
  PartyId id() const { return id_; }
  // Pops the oldest message sent to this party by `from`.
  BitString Receive(PartyId from);
  std::size_t Pending(PartyId from) const;
  const std::vector<BroadcastRecord>& broadcasts() const;

 private:
  friend class ChannelFabric;
  PartyChannel(ChannelFabric* fabric, PartyId id) : fabric_(fabric), id_(id) {}
  ChannelFabric* fabric_;
  PartyId id_;
};

// Lockstep communication fabric for one run. Private channels are perfectly
// secure and authenticated; broadcasts are authenticated and ordered.
class ChannelFabric {
 public:
  ChannelFabric(int n, std::uint64_t seed);

  int n() const { return n_; }

  void SendPrivate(PartyId from, PartyId to, const BitString& payload);
  PartyChannel View(PartyId who);

  // Declares the order in which parties must broadcast in the next
  // sub-round. Each listed party must then Broadcast or Refuse in turn.
  void BeginBroadcastRound(std::vector<PartyId> order);
  void Broadcast(PartyId from, const BitString& payload);
  void Refuse(PartyId from);
  bool BroadcastRoundComplete() const { return cursor_ == order_.size(); }
  const std::vector<BroadcastRecord>& broadcast_log() const { return log_; }
  // Broadcast log retention is off by default; long runs only need the
  // ledger. Per-round records are still produced for the current round.
  void KeepBroadcastLog(bool keep) { keep_log_ = keep; }
  const std::vector<BroadcastRecord>& current_round() const { return current_; }

  // Public randomness. Output depends only on (run seed, invocation count).
  BeaconOutput BeaconSample(std::size_t in_len, std::size_t out_len);
  std::int64_t beacon_invocations() const { return beacon_counter_; }

  // Number of 1 bits privately delivered to `who` so far.
  std::int64_t private_ones_received(PartyId who) const {
    return ones_received_.at(who.value);
  }

  // Number of 1 bits broadcast so far.
  std::int64_t broadcast_ones() const { return ones_broadcast_; }

  void AdvanceRound() { ++round_; }
  std::int64_t round() const { return round_; }

  CostLedger& ledger() { return ledger_; }
  const CostLedger& ledger() const { return ledger_; }
  CostReport ledger_report() const { return ledger_.Snapshot(); }

  // Text transcript, one line per message: round, channel-type, from, to,
  // payload-hex. Broadcast lines use "*" as the recipient.
  void EnableTranscript(bool on) { transcript_on_ = on; }
  const std::vector<std::string>& transcript() const { return transcript_; }
  void DumpTranscript(std::ostream& out) const;

 private:
  friend class PartyChannel;
  void CheckParty(PartyId who) const;
  std::deque<BitString>& Queue(PartyId from, PartyId to) {
    return queues_[static_cast<std::size_t>(from.value) * n_ + to.value];
  }
  void Record(const char* type, PartyId from, const std::string& to,
              const BitString* payload);
  void NextBroadcaster(PartyId from);

  int n_;
  std::uint64_t seed_;
  std::vector<std::deque<BitString>> queues_;
  std::vector<std::int64_t> ones_received_;
  std::int64_t ones_broadcast_ = 0;
  std::vector<PartyId> order_;
  std::size_t cursor_ = 0;
  std::vector<BroadcastRecord> log_;
  std::vector<BroadcastRecord> current_;
  bool keep_log_ = false;
  std::int64_t beacon_counter_ = 0;
  std::int64_t round_ = 0;
  CostLedger ledger_;
  bool transcript_on_ = false;
  std::vector<std::string> transcript_;
};

}  // namespace acka

#endif  // ACKA_NETSIM_H_
