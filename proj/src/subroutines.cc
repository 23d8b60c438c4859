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

#include "acka/subroutines.h"

#include <stdexcept>

namespace acka {

const char* PhaseName(Phase phase) {
  switch (phase) {
    case Phase::kNone: return "none";
    case Phase::kCollisionVetoA: return "collision-veto-a";
    case Phase::kCollisionVetoB: return "collision-veto-b";
    case Phase::kIdTransport: return "id-transport";
    case Phase::kIdVeto: return "id-veto";
    case Phase::kTkdNotification: return "tkd-notification";
    case Phase::kTkdDistribution: return "tkd-distribution";
    case Phase::kKeyReveal: return "key-reveal";
    case Phase::kTestParity: return "test-parity";
    case Phase::kVerificationVeto: return "verification-veto";
    case Phase::kEcSyndrome: return "ec-syndrome";
    case Phase::kEcHash: return "ec-hash";
    case Phase::kEcVerdict: return "ec-verdict";
    case Phase::kBifullyNotification: return "bifully-notification";
    case Phase::kBifullyDistribution: return "bifully-distribution";
    case Phase::kFinalVeto: return "final-veto";
  }
  return "unknown";
}

ParityResult ParityRound(SubprotocolContext& ctx, std::vector<Bit> inputs,
                         const ParityOptions& options) {
  ChannelFabric& fabric = *ctx.fabric;
  const int n = fabric.n();
  if (static_cast<int>(inputs.size()) != n) {
    throw std::invalid_argument("Parity needs one input per party");
  }
  PartySet refusing;
  if (ctx.hook) ctx.hook->OnParity(ctx.phase, ctx.segment, ctx.index, inputs, refusing);
  ++ctx.index;
  fabric.AdvanceRound();
  fabric.ledger().AddParityRound();

  // Shares: party t draws r_t^j for j != t and keeps the share fixing parity.
  std::vector<Bit> kept(n);
  for (int t = 0; t < n; ++t) {
    Bit acc = inputs[t] & 1;
    for (int j = 0; j < n; ++j) {
      if (j == t) continue;
      Bit share = ctx.tape->Draw(PartyId(t));
      acc ^= share;
      fabric.SendPrivate(PartyId(t), PartyId(j), BitString{share});
    }
    kept[t] = acc;
  }
  std::vector<Bit> z(n);
  for (int t = 0; t < n; ++t) {
    PartyChannel view = fabric.View(PartyId(t));
    Bit acc = kept[t];
    for (int j = 0; j < n; ++j) {
      if (j != t) acc ^= view.Receive(PartyId(j))[0];
    }
    z[t] = acc;
  }

  std::vector<PartyId> order;
  for (int t = 0; t < n; ++t) {
    PartyId p(t);
    if (options.silent_party == p || options.last_broadcaster == p) continue;
    order.push_back(p);
  }
  if (options.last_broadcaster && options.last_broadcaster != options.silent_party) {
    order.push_back(*options.last_broadcaster);
  }
  fabric.BeginBroadcastRound(order);
  for (PartyId p : order) {
    if (refusing.count(p)) {
      fabric.Refuse(p);
    } else {
      fabric.Broadcast(p, BitString{z[p.value]});
    }
  }

  ParityResult result;
  result.outputs.assign(n, std::nullopt);
  Bit total = 0;
  for (const auto& rec : fabric.current_round()) {
    if (rec.refused()) {
      result.refused = true;
    } else {
      total ^= (*rec.payload)[0];
    }
  }
  if (options.silent_party) {
    int s = options.silent_party->value;
    result.outputs[s] = total ^ z[s];
  } else {
    for (int t = 0; t < n; ++t) result.outputs[t] = total;
  }
  return result;
}

BitString ParityString(SubprotocolContext& ctx,
                       const std::vector<BitString>& inputs, bool* refused) {
  const int n = ctx.n();
  if (static_cast<int>(inputs.size()) != n) {
    throw std::invalid_argument("ParityString needs one input per party");
  }
  const std::size_t len = inputs[0].size();
  for (const auto& s : inputs) {
    if (s.size() != len) throw std::invalid_argument("ParityString: ragged inputs");
  }
  BitString out(len);
  std::vector<Bit> column(n);
  for (std::size_t i = 0; i < len; ++i) {
    for (int t = 0; t < n; ++t) column[t] = inputs[t][i];
    ParityResult r = ParityRound(ctx, column);
    if (r.refused && refused) *refused = true;
    out.set(i, *r.outputs[0]);
  }
  return out;
}

VetoResult Veto(SubprotocolContext& ctx, const std::vector<Bit>& inputs,
                int r_v) {
  const int n = ctx.n();
  if (r_v < 1) throw std::invalid_argument("Veto needs r_V >= 1");
  if (static_cast<int>(inputs.size()) != n) {
    throw std::invalid_argument("Veto needs one input per party");
  }
  VetoResult result;
  result.collision_seen.assign(n, false);
  std::vector<Bit> q(n);
  for (int t = 0; t < n; ++t) {
    for (int rep = 0; rep < r_v; ++rep) {
      for (int j = 0; j < n; ++j) {
        q[j] = inputs[j] ? ctx.tape->Draw(PartyId(j)) : 0;
      }
      ParityOptions opts;
      opts.last_broadcaster = PartyId(t);
      ParityResult r = ParityRound(ctx, q, opts);
      Bit outcome = *r.outputs[0];
      if (outcome || r.refused) result.output = 1;
      for (int j = 0; j < n; ++j) {
        if (inputs[j] && (r.refused || outcome != q[j])) {
          result.collision_seen[j] = true;
        }
      }
    }
  }
  return result;
}

int CollisionDetection(SubprotocolContext& ctx, const std::vector<int>& inputs,
                       int r_v) {
  const int n = ctx.n();
  std::vector<Bit> a(n);
  for (int t = 0; t < n; ++t) {
    if (inputs[t] < 0 || inputs[t] > 2) {
      throw std::invalid_argument("Collision Detection inputs are trits");
    }
    a[t] = inputs[t] >= 1 ? 1 : 0;
  }
  Phase outer = ctx.phase;
  ctx.Enter(Phase::kCollisionVetoA);
  VetoResult va = Veto(ctx, a, r_v);
  if (va.output == 0) {
    ctx.Enter(outer);
    return 0;
  }
  std::vector<Bit> b(n);
  for (int t = 0; t < n; ++t) {
    b[t] = (inputs[t] == 1 && va.collision_seen[t]) || inputs[t] == 2;
  }
  ctx.Enter(Phase::kCollisionVetoB);
  VetoResult vb = Veto(ctx, b, r_v);
  ctx.Enter(outer);
  return vb.output ? 2 : 1;
}

std::vector<Bit> Notify(SubprotocolContext& ctx, PartyId alice, PartyId target,
                        int r_n, bool suppress) {
  const int n = ctx.n();
  if (alice == target) throw std::invalid_argument("Alice cannot notify herself");
  if (r_n < 1) throw std::invalid_argument("Notification needs r_N >= 1");
  std::vector<Bit> y(n, 0);
  std::vector<Bit> p(n, 0);
  for (int t = 0; t < n; ++t) {
    ParityOptions opts;
    opts.silent_party = PartyId(t);
    for (int rep = 0; rep < r_n; ++rep) {
      p.assign(n, 0);
      if (t == target.value && !suppress) p[alice.value] = ctx.tape->Draw(alice);
      ParityResult r = ParityRound(ctx, p, opts);
      if (*r.outputs[t]) y[t] = 1;
    }
  }
  return y;
}

}  // namespace acka
