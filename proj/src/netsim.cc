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

#include "acka/netsim.h"

#include <sstream>
#include <stdexcept>

#include "acka/randomness.h"

namespace acka {

BitString PartyChannel::Receive(PartyId from) {
  fabric_->CheckParty(from);
  auto& q = fabric_->Queue(from, id_);
  if (q.empty()) throw std::logic_error("no pending private message");
  BitString msg = std::move(q.front());
  q.pop_front();
  return msg;
}

std::size_t PartyChannel::Pending(PartyId from) const {
  fabric_->CheckParty(from);
  return fabric_->Queue(from, id_).size();
}

const std::vector<BroadcastRecord>& PartyChannel::broadcasts() const {
  return fabric_->broadcast_log();
}

ChannelFabric::ChannelFabric(int n, std::uint64_t seed)
    : n_(n), seed_(seed), queues_(static_cast<std::size_t>(n) * n),
      ones_received_(n > 0 ? n : 0, 0) {
  if (n < 2) throw std::invalid_argument("fabric needs at least two parties");
}

void ChannelFabric::CheckParty(PartyId who) const {
  if (who.value < 0 || who.value >= n_) {
    throw std::out_of_range("unknown party id " + std::to_string(who.value));
  }
}

void ChannelFabric::SendPrivate(PartyId from, PartyId to,
                                const BitString& payload) {
  CheckParty(from);
  CheckParty(to);
  if (from == to) throw std::invalid_argument("private send to self");
  if (transcript_on_) Record("private", from, std::to_string(to.value), &payload);
  ones_received_[to.value] += static_cast<std::int64_t>(payload.weight());
  Queue(from, to).push_back(payload);
  ledger_.AddPrivate(static_cast<std::int64_t>(payload.size()));
}

PartyChannel ChannelFabric::View(PartyId who) {
  CheckParty(who);
  return PartyChannel(this, who);
}

void ChannelFabric::BeginBroadcastRound(std::vector<PartyId> order) {
  if (!BroadcastRoundComplete()) {
    throw std::logic_error("previous broadcast round is unfinished");
  }
  for (PartyId p : order) CheckParty(p);
  order_ = std::move(order);
  cursor_ = 0;
  current_.clear();
}

void ChannelFabric::NextBroadcaster(PartyId from) {
  CheckParty(from);
  if (cursor_ >= order_.size() || order_[cursor_] != from) {
    throw std::logic_error("out-of-order broadcast by party " +
                           std::to_string(from.value));
  }
  ++cursor_;
}

void ChannelFabric::Broadcast(PartyId from, const BitString& payload) {
  NextBroadcaster(from);
  if (transcript_on_) Record("broadcast", from, "*", &payload);
  current_.push_back(BroadcastRecord{round_, from, payload});
  if (keep_log_) log_.push_back(current_.back());
  ledger_.AddBroadcast(static_cast<std::int64_t>(payload.size()));
  ones_broadcast_ += static_cast<std::int64_t>(payload.weight());
}

void ChannelFabric::Refuse(PartyId from) {
  NextBroadcaster(from);
  if (transcript_on_) Record("refuse", from, "*", nullptr);
  current_.push_back(BroadcastRecord{round_, from, std::nullopt});
  if (keep_log_) log_.push_back(current_.back());
}

BeaconOutput ChannelFabric::BeaconSample(std::size_t in_len,
                                         std::size_t out_len) {
  if (out_len > in_len) throw std::invalid_argument("beacon: out_len > in_len");
  std::mt19937_64 rng = MakeEngine(seed_, Stream::kBeacon,
                                   static_cast<std::uint64_t>(beacon_counter_++));
  BeaconOutput out;
  out.in_len = in_len;
  out.out_len = out_len;
  std::size_t seed_len = in_len + out_len == 0 ? 0 : in_len + out_len - 1;
  out.hash_seed = BitString::Random(seed_len, rng);
  return out;
}

void ChannelFabric::Record(const char* type, PartyId from, const std::string& to,
                           const BitString* payload) {
  std::ostringstream line;
  line << round_ << ", " << type << ", " << from.value << ", " << to << ", "
       << (payload ? payload->ToHex() : std::string("-"));
  transcript_.push_back(line.str());
}

void ChannelFabric::DumpTranscript(std::ostream& out) const {
  for (const auto& line : transcript_) out << line << '\n';
}

}  // namespace acka
