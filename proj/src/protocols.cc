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

#include "acka/protocols.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "acka/amd.h"
#include "acka/randomness.h"
#include "acka/subroutines.h"
#include "acka/testing_key.h"

namespace acka {

PartySet DefaultReceivers(int n, int m, PartyId sender) {
  PartySet out;
  for (int k = 1; k <= m; ++k) out.insert(PartyId((sender.value + k) % n));
  return out;
}

double EstimateQxObs(const std::vector<std::vector<Bit>>& records) {
  if (records.empty()) return 0.0;
  std::size_t odd = 0;
  for (const auto& row : records) {
    Bit parity = 0;
    for (Bit b : row) parity ^= b;
    odd += parity;
  }
  return static_cast<double>(odd) / static_cast<double>(records.size());
}

BitString PrivacyAmplify(const BitString& raw, const BeaconOutput& beacon,
                         std::int64_t ell) {
  if (ell <= 0) throw std::domain_error("no extractable key");
  if (beacon.out_len != static_cast<std::size_t>(ell) || beacon.in_len < raw.size()) {
    throw std::invalid_argument("privacy amplification: beacon size mismatch");
  }
  BitString padded = raw;
  padded.resize(beacon.in_len);
  return ToeplitzHash(beacon).Apply(padded);
}

BitString EncodeIdentity(int n, PartyId sender, const PartySet& receivers,
                         PartyId t) {
  BitString d{1};
  d.append(BitString::FromUint(static_cast<std::uint64_t>(sender.value),
                               CeilLog2(static_cast<std::uint64_t>(n))));
  for (int u = 0; u < n; ++u) {
    if (u == sender.value || u == t.value) continue;
    d.push_back(receivers.count(PartyId(u)) ? 1 : 0);
  }
  return d;
}

std::optional<InformedReceiverRole> DecodeIdentity(int n, const BitString& d,
                                                   PartyId t) {
  const int w = CeilLog2(static_cast<std::uint64_t>(n));
  if (static_cast<int>(d.size()) != n - 1 + w || d[0] != 1) return std::nullopt;
  const auto pos = d.slice(1, w).ToUint();
  if (pos >= static_cast<std::uint64_t>(n) || static_cast<int>(pos) == t.value) {
    return std::nullopt;
  }
  InformedReceiverRole role;
  role.sender = PartyId(static_cast<int>(pos));
  std::size_t i = 1 + w;
  for (int u = 0; u < n; ++u) {
    if (u == role.sender.value || u == t.value) continue;
    if (d[i++]) role.co_receivers.insert(PartyId(u));
  }
  return role;
}

namespace {

bool BelievesBob(const Role& r) {
  return std::holds_alternative<ReceiverRole>(r) ||
         std::holds_alternative<InformedReceiverRole>(r);
}

double Score(double q, const ProtocolParams& p) {
  const double L = static_cast<double>(p.L);
  if (q >= 0.5) return q;
  if (!(p.p > 0.0 && p.p < 1.0) || L * p.p < 1.0) return q;
  return q + GammaFluctuation(q, L, p.p, p.eps_x).gamma;
}

class Runner {
 public:
  explicit Runner(const RunConfig& cfg)
      : cfg_(cfg),
        v_(ValidateParams(cfg.params)),
        P_(v_.params),
        D_(v_.lengths),
        n_(P_.n),
        fabric_(n_, P_.seed),
        tape_(n_, P_.seed),
        adversary_(cfg.adversary, P_.seed),
        source_rng_(MakeEngine(P_.seed, Stream::kSource)),
        pool_rng_(MakeEngine(P_.seed, Stream::kKeyPool)),
        noise_(cfg.noise ? *cfg.noise : NoiseModel(DirectRates{P_.q_x, P_.q_z})) {
    ValidateNoise(noise_);
    ValidateScript(cfg.adversary, n_);
    if (cfg.sender.value < 0 || cfg.sender.value >= n_) {
      throw ConfigError("sender must be a party index in [0, n)");
    }
    alice_ = cfg.sender;
    bobs_ = cfg.receivers ? *cfg.receivers : DefaultReceivers(n_, P_.m, alice_);
    if (bobs_.empty()) throw ConfigError("at least one receiver required");
    for (PartyId b : bobs_) {
      if (b.value < 0 || b.value >= n_) throw ConfigError("receiver out of range");
      if (b == alice_) throw ConfigError("sender cannot be a receiver");
    }
    for (PartyId u : cfg.unnotified) {
      if (u.value < 0 || u.value >= n_ || u == alice_) {
        throw ConfigError("unnotified party must be a non-sender party index");
      }
    }
    if (cfg.ec_block == 0) throw ConfigError("ec_block must be positive");
    fabric_.EnableTranscript(cfg.transcript);
    fabric_.KeepBroadcastLog(cfg.keep_broadcast_log);
    ctx_.fabric = &fabric_;
    ctx_.tape = &tape_;
    ctx_.hook = cfg.adversary.empty() ? nullptr : &adversary_;
    out_.protocol = cfg.protocol;
    out_.sender = alice_;
    out_.receivers = bobs_;
    out_.views.resize(n_);
    for (int t = 0; t < n_; ++t) out_.views[t].id = PartyId(t);
  }

  RunOutcome Run() {
    switch (cfg_.protocol) {
      case ProtocolKind::kAcka: RunGhz(false); break;
      case ProtocolKind::kFullyAcka: RunGhz(true); break;
      case ProtocolKind::kBacka: RunBacka(); break;
      case ProtocolKind::kBifullyAcka: RunBifully(); break;
    }
    Finish();
    return std::move(out_);
  }

 private:
  PartyView& view(PartyId t) { return out_.views[t.value]; }
  bool IsBob(PartyId t) const { return bobs_.count(t) > 0; }
  bool Believes(PartyId t) { return BelievesBob(view(t).role); }
  BitString Rand(PartyId t, std::size_t len) { return tape_.RandomBits(t, len); }
  Bit Coin(PartyId t) { return static_cast<Bit>(tape_.engine(t)() >> 63); }

  std::vector<PartyId> Participants() const {
    std::vector<PartyId> out{alice_};
    out.insert(out.end(), bobs_.begin(), bobs_.end());
    return out;
  }

  // Closes the current accounting stage and opens `next`.
  void Mark(const std::string& next) {
    const auto bits = fabric_.ledger_report().private_bits_consumed;
    const auto ones = fabric_.broadcast_ones();
    if (!stage_.empty()) {
      out_.stage_private_bits[stage_] += bits - mark_bits_;
      out_.public_ones[stage_] += ones - mark_ones_;
    }
    stage_ = next;
    mark_bits_ = bits;
    mark_ones_ = ones;
  }

  std::vector<BitString> Zeros(std::size_t len) const {
    return std::vector<BitString>(n_, BitString(len));
  }

  // Everybody broadcasts in ascending order.
  std::vector<BitString> BroadcastAll(const std::vector<BitString>& payloads) {
    std::vector<PartyId> order;
    for (int t = 0; t < n_; ++t) order.emplace_back(t);
    fabric_.AdvanceRound();
    fabric_.BeginBroadcastRound(order);
    for (PartyId t : order) fabric_.Broadcast(t, payloads[t.value]);
    return payloads;
  }

  void GlobalAbort(const std::string& reason) {
    for (auto& v : out_.views) v.conference_key.reset();
    if (out_.abort_reason.empty()) out_.abort_reason = reason;
  }

  bool IdentityDesignation(bool fully) {
    std::vector<int> applicants(n_, 0);
    applicants[alice_.value] = 1;
    for (PartyId c : cfg_.adversary.corrupt) {
      applicants[c.value] = std::max(applicants[c.value], adversary_.ApplicantInput(c));
    }
    Mark("collision");
    out_.collision_output = CollisionDetection(ctx_, applicants, P_.r_v);
    auto abort_id = [&](const std::string& why) {
      Mark("");
      out_.stage_private_bits["id"] = out_.stage_private_bits["collision"] +
                                      out_.stage_private_bits["id-transport"] +
                                      out_.stage_private_bits["id-veto"];
      out_.id_abort = true;
      out_.abort_reason = why;
      for (auto& v : out_.views) v.role = AbortedRole{};
      return false;
    };
    if (out_.collision_output != 1) {
      return abort_id(out_.collision_output == 0 ? "collision detection: no applicant"
                                                 : "collision detection: collision");
    }

    Mark("id-transport");
    const std::size_t msg_len = fully ? 1 : static_cast<std::size_t>(D_.identity);
    AmdCode code(msg_len, P_.eps_enc);
    const std::size_t cw = code.codeword_len();
    std::vector<Bit> v(n_, 0);
    for (int ti = 0; ti < n_; ++ti) {
      PartyId t(ti);
      ctx_.Enter(Phase::kIdTransport, ti);
      auto inputs = Zeros(cw);
      BitString mask = Rand(t == alice_ ? alice_ : t, cw);
      if (t != alice_) {
        BitString d;
        if (fully) {
          d = BitString{IsBob(t) ? 1 : 0};
        } else if (IsBob(t)) {
          d = EncodeIdentity(n_, alice_, bobs_, t);
        } else {
          d = BitString{0};
          d.append(Rand(alice_, msg_len - 1));
        }
        inputs[alice_.value] = code.Encode(d, tape_.engine(alice_));
        inputs[ti] = mask;
      } else {
        inputs[ti] = code.Encode(BitString(msg_len), tape_.engine(alice_)) ^ mask;
      }
      BitString o = ParityString(ctx_, inputs);
      auto decoded = code.Decode(mask ^ o);
      if (!decoded) {
        v[ti] = 1;
        continue;
      }
      if (t == alice_) continue;
      PartyView& pv = view(t);
      if ((*decoded)[0] == 0) {
        pv.role = NonParticipantRole{};
      } else if (fully) {
        pv.role = ReceiverRole{};
      } else if (auto role = DecodeIdentity(n_, *decoded, t)) {
        pv.role = *role;
      } else {
        v[ti] = 1;
      }
    }
    view(alice_).role = SenderRole{bobs_};

    Mark("id-veto");
    ctx_.Enter(Phase::kIdVeto);
    Bit veto = Veto(ctx_, v, P_.r_v).output;
    Mark("");
    out_.stage_private_bits["id"] = out_.stage_private_bits["collision"] +
                                    out_.stage_private_bits["id-transport"] +
                                    out_.stage_private_bits["id-veto"];
    if (veto) return abort_id("identity designation veto");

    bool correct = true;
    for (int t = 0; t < n_; ++t) {
      PartyId id(t);
      const Role& r = view(id).role;
      if (id == alice_) continue;
      if (!IsBob(id)) {
        correct &= std::holds_alternative<NonParticipantRole>(r);
      } else if (fully) {
        correct &= std::holds_alternative<ReceiverRole>(r);
      } else {
        PartySet co = bobs_;
        co.erase(id);
        correct &= r == Role(InformedReceiverRole{alice_, co});
      }
    }
    out_.id_correct = correct;
    return true;
  }

  // Pre-shared conference key of the participants; parties whose ID view
  // disagrees with the true participant set hold unrelated bits.
  bool HoldsPool(PartyId t) {
    if (t == alice_) return true;
    const auto* r = std::get_if<InformedReceiverRole>(&view(t).role);
    if (!r || !IsBob(t) || r->sender != alice_) return false;
    PartySet co = bobs_;
    co.erase(t);
    return r->co_receivers == co;
  }
  BitString PoolView(PartyId t, const BitString& truth) {
    return HoldsPool(t) ? truth : Rand(t, truth.size());
  }

  struct Measurements {
    std::vector<std::vector<Basis>> bases;  // [party][round]
    std::vector<std::vector<Bit>> outcomes;
  };

  Measurements Distribute(const std::vector<std::optional<BitString>>& schedules) {
    Mark("ghz");
    const auto L = static_cast<std::size_t>(P_.L);
    Measurements m;
    m.bases.assign(n_, std::vector<Basis>(L, Basis::kX));
    m.outcomes.assign(n_, std::vector<Bit>(L, 0));
    for (int t = 0; t < n_; ++t) {
      if (!schedules[t]) continue;
      for (std::size_t i = 0; i < L; ++i) {
        m.bases[t][i] = (*schedules[t])[i] ? Basis::kX : Basis::kZ;
      }
    }
    const double detect = std::pow(P_.eta, n_);
    std::vector<Basis> bases(n_);
    for (std::size_t i = 0; i < L; ++i) {
      fabric_.ledger().AddGhz(AttemptsUntilDetected(detect, source_rng_), 1);
      for (int t = 0; t < n_; ++t) bases[t] = m.bases[t][i];
      std::optional<PartyId> ref;
      if (bases[alice_.value] == Basis::kZ) ref = alice_;
      auto outcome = SampleDetectedOutcomes(noise_, bases, source_rng_, ref);
      for (int t = 0; t < n_; ++t) m.outcomes[t][i] = outcome[t];
    }
    return m;
  }

  // Steps 5-7 shared by the GHZ protocols. Returns v_s (verification failed)
  // and fills the revealed schedule.
  bool RevealAndTest(const BitString& k_t, const Measurements& meas,
                     BitString& revealed_schedule) {
    Mark("reveal");
    ctx_.Enter(Phase::kKeyReveal);
    auto inputs = Zeros(k_t.size());
    inputs[alice_.value] = k_t;
    BitString k_t_prime = ParityString(ctx_, inputs);
    ScheduleCoder coder(P_.p);
    const auto L = static_cast<std::size_t>(P_.L);
    revealed_schedule = coder.Decode(k_t_prime, L);

    Mark("test");
    std::vector<std::size_t> tests;
    for (std::size_t i = 0; i < L; ++i) {
      if (revealed_schedule[i]) tests.push_back(i);
    }
    auto xin = Zeros(tests.size());
    BitString x_a(tests.size());
    for (std::size_t k = 0; k < tests.size(); ++k) {
      const std::size_t i = tests[k];
      for (int t = 0; t < n_; ++t) {
        Bit x = meas.bases[t][i] == Basis::kX ? meas.outcomes[t][i] : Coin(PartyId(t));
        if (t == alice_.value) {
          x_a.set(k, x);
          xin[t].set(k, Coin(alice_));
        } else {
          xin[t].set(k, x);
        }
      }
    }
    ctx_.Enter(Phase::kTestParity);
    BitString o_t = ParityString(ctx_, xin);
    out_.test_rounds = static_cast<std::int64_t>(tests.size());
    const BitString errors = x_a ^ xin[alice_.value] ^ o_t;
    if (tests.empty()) {
      out_.degenerate = true;
      out_.q_x_obs = 0.0;
      return false;
    }
    out_.q_x_obs = static_cast<double>(errors.weight()) / static_cast<double>(tests.size());
    out_.threshold = Score(P_.q_x, P_);
    out_.observed_score = Score(out_.q_x_obs, P_);
    return out_.observed_score > out_.threshold;
  }

  static BitString KeyRounds(const std::vector<Bit>& outcomes,
                             const BitString& schedule) {
    BitString raw;
    for (std::size_t i = 0; i < schedule.size(); ++i) {
      if (!schedule[i]) raw.push_back(outcomes[i]);
    }
    return raw;
  }

  BitString Pad(BitString s, std::size_t len) const {
    if (s.size() < len) s.resize(len);
    return s;
  }

  void Amplify(ProtocolKind kind, const std::vector<PartyId>& holders,
               const std::vector<BitString>& keys) {
    Mark("pa");
    KeyLength k = FiniteKeyLength(kind, P_);
    out_.ell_raw = k.ell_raw;
    out_.ell = k.ell;
    out_.ell_net = kind == ProtocolKind::kAcka ? k.ell_net : k.ell;
    if (holders.empty()) return;
    if (k.ell <= 0) {
      GlobalAbort("no extractable key");
      return;
    }
    std::size_t in_len = std::max<std::size_t>(
        {keys[0].size(), static_cast<std::size_t>(D_.raw_key), static_cast<std::size_t>(k.ell)});
    BeaconOutput beacon = fabric_.BeaconSample(in_len, static_cast<std::size_t>(k.ell));
    for (std::size_t i = 0; i < holders.size(); ++i) {
      view(holders[i]).conference_key = PrivacyAmplify(keys[i], beacon, k.ell);
    }
  }

  void RunGhz(bool fully) {
    if (!IdentityDesignation(fully)) return;
    const auto L = static_cast<std::size_t>(P_.L);
    TestingKey tk = DrawTestingKey(L, P_.p, static_cast<std::size_t>(D_.testing_key),
                                   tape_.engine(alice_));
    out_.resamples = tk.resamples;
    ScheduleCoder coder(P_.p);
    std::vector<std::optional<BitString>> schedules(n_);
    schedules[alice_.value] = tk.schedule;
    view(alice_).testing_key = tk.key;

    bool v_a = false;
    std::vector<bool> notified(n_, false);
    std::vector<std::optional<BitString>> tokens(n_);  // (b_l, r_empty)
    BitString r_empty;
    std::vector<Bit> b_true(n_, 0);
    AmdCode token_code(static_cast<std::size_t>(1 + D_.verdict_pad), P_.eps_enc);

    // Pre-shared key material of ACKA.
    BitString k1, k2, k3, masks;
    if (!fully) {
      k1 = BitString::Random(static_cast<std::size_t>(D_.testing_key), pool_rng_);
      k2 = BitString::Random(static_cast<std::size_t>(D_.syndrome), pool_rng_);
      k3 = BitString::Random(static_cast<std::size_t>(D_.hash), pool_rng_);
      masks = BitString::Random(static_cast<std::size_t>(n_), pool_rng_);
      fabric_.ledger().AddKeyPool(D_.testing_key + D_.syndrome + D_.hash + n_);

      Mark("camouflage");
      std::vector<BitString> payloads(n_);
      for (int t = 0; t < n_; ++t) {
        payloads[t] = t == alice_.value ? tk.key ^ k1
                                        : Rand(PartyId(t), static_cast<std::size_t>(D_.testing_key));
      }
      auto seen = BroadcastAll(payloads);
      for (PartyId b : bobs_) {
        if (!Believes(b)) continue;
        BitString key = seen[alice_.value] ^ PoolView(b, k1);
        view(b).testing_key = key;
        schedules[b.value] = coder.Decode(key, L);
      }
    } else {
      // Step 2 and TKD.
      r_empty = Rand(alice_, static_cast<std::size_t>(D_.verdict_pad));
      std::vector<BitString> r_l(n_);
      for (int t = 0; t < n_; ++t) {
        if (t == alice_.value) continue;
        b_true[t] = Coin(alice_);
        BitString msg{b_true[t]};
        msg.append(IsBob(PartyId(t)) ? r_empty : Rand(alice_, r_empty.size()));
        r_l[t] = token_code.Encode(msg, tape_.engine(alice_));
      }
      Mark("tkd");
      std::vector<PartyId> order;
      for (int t = 0; t < n_; ++t) {
        if (t != alice_.value) order.emplace_back(t);
      }
      std::shuffle(order.begin(), order.end(), tape_.engine(alice_));
      const std::size_t klen = static_cast<std::size_t>(D_.tkd_key);
      for (std::size_t it = 0; it < order.size(); ++it) {
        PartyId s = order[it];
        ctx_.Enter(Phase::kTkdNotification, static_cast<int>(it));
        auto y = Notify(ctx_, alice_, s, P_.r_n, cfg_.unnotified.count(s) > 0);
        ctx_.Enter(Phase::kTkdDistribution, static_cast<int>(it));
        auto inputs = Zeros(klen);
        BitString k_s = Concat(tk.key, r_l[s.value]);
        BitString alice_mask = Rand(alice_, klen);
        inputs[alice_.value] = IsBob(s) ? k_s : k_s ^ alice_mask;
        std::vector<BitString> own(n_);
        for (int t = 0; t < n_; ++t) {
          if (t == alice_.value || !y[t]) continue;
          notified[t] = true;
          if (Believes(PartyId(t))) {
            own[t] = Rand(PartyId(t), klen);
            inputs[t] = own[t];
          }
        }
        BitString o = ParityString(ctx_, inputs);
        for (int t = 0; t < n_; ++t) {
          if (t == alice_.value || !y[t] || !Believes(PartyId(t))) continue;
          BitString got = o ^ own[t];
          view(PartyId(t)).testing_key = got.slice(0, tk.key.size());
          tokens[t] = token_code.Decode(got.slice(tk.key.size(), got.size() - tk.key.size()));
        }
        if (!IsBob(s)) {
          BitString got = o ^ alice_mask;
          if (!token_code.Decode(got.slice(tk.key.size(), got.size() - tk.key.size()))) {
            v_a = true;
          }
        }
      }
      for (int t = 0; t < n_; ++t) {
        PartyId id(t);
        if (id == alice_ || !Believes(id)) continue;
        PartyView& pv = view(id);
        if (!notified[t] || !tokens[t]) pv.v = true;
        if (pv.testing_key.empty()) pv.testing_key = BitString(tk.key.size());
        schedules[t] = coder.Decode(pv.testing_key, L);
      }
      for (int t = 0; t < n_; ++t) view(PartyId(t)).notified = notified[t];
    }

    Measurements meas = Distribute(schedules);
    BitString revealed;
    bool v_s = RevealAndTest(tk.key, meas, revealed);

    std::vector<PartyId> holders;
    for (PartyId p : Participants()) {
      if (p == alice_ || Believes(p)) holders.push_back(p);
    }
    if (fully) {
      Mark("verification");
      std::vector<Bit> vin(n_, 0);
      for (int t = 0; t < n_; ++t) {
        PartyId id(t);
        if (id == alice_) vin[t] = (v_s || v_a) ? 1 : 0;
        else if (Believes(id)) vin[t] = view(id).v ? 1 : 0;
        else vin[t] = notified[t] ? 0 : 1;
      }
      view(alice_).v = v_s || v_a;
      ctx_.Enter(Phase::kVerificationVeto);
      if (Veto(ctx_, vin, P_.r_v).output) {
        out_.verification_abort = true;
        GlobalAbort(v_s ? "secrecy verification failed" : "verification veto");
        Mark("");
        ClassifyParticipants();
        return;
      }
    } else {
      view(alice_).v = v_s;
    }

    // Raw keys over the rounds k'_T marks as key generation.
    std::vector<BitString> raw(n_);
    for (PartyId h : holders) raw[h.value] = KeyRounds(meas.outcomes[h.value], revealed);
    const BitString& raw_a = raw[alice_.value];
    out_.raw_key_len = static_cast<std::int64_t>(raw_a.size());

    Mark("ec");
    const std::size_t s_len = std::min<std::size_t>(static_cast<std::size_t>(D_.syndrome), raw_a.size());
    auto corrector = MakeCorrector(cfg_.ec_backend, fabric_, raw_a.size(), s_len, cfg_.ec_block);
    BitString y = corrector->Syndrome(raw_a);
    std::vector<BitString> corrected(n_);
    std::vector<bool> failed(n_, false);
    corrected[alice_.value] = raw_a;

    std::vector<bool> aborted(n_, false);
    if (!fully) {
      BitString k2u = k2.slice(0, s_len);
      std::vector<BitString> payloads(n_);
      for (int t = 0; t < n_; ++t) {
        payloads[t] = t == alice_.value ? y ^ k2u : Rand(PartyId(t), s_len);
      }
      auto seen = BroadcastAll(payloads);
      for (PartyId h : holders) {
        if (h == alice_) continue;
        auto fixed = corrector->Correct(raw[h.value], seen[alice_.value] ^ PoolView(h, k2u));
        failed[h.value] = !fixed;
        corrected[h.value] = fixed ? *fixed : raw[h.value];
      }
      const std::size_t in_len = std::max<std::size_t>(raw_a.size(), static_cast<std::size_t>(D_.hash));
      ToeplitzHash hash(fabric_.BeaconSample(in_len, static_cast<std::size_t>(D_.hash)));
      BitString h_a = hash.Apply(Pad(raw_a, in_len));
      for (int t = 0; t < n_; ++t) {
        payloads[t] = t == alice_.value ? h_a ^ k3 : Rand(PartyId(t), k3.size());
      }
      seen = BroadcastAll(payloads);
      for (PartyId h : holders) {
        if (h == alice_) continue;
        BitString h_b = hash.Apply(Pad(corrected[h.value], in_len));
        view(h).v = failed[h.value] || h_b != (seen[alice_.value] ^ PoolView(h, k3));
      }
      // v-bit exchange masked with pool bits assigned by party index.
      for (int t = 0; t < n_; ++t) {
        PartyId id(t);
        bool participant = std::find(holders.begin(), holders.end(), id) != holders.end();
        payloads[t] = participant ? BitString{static_cast<Bit>(view(id).v ^ masks[t])}
                                  : BitString{Coin(id)};
      }
      seen = BroadcastAll(payloads);
      for (PartyId h : holders) {
        BitString my_masks = PoolView(h, masks);
        for (PartyId q : holders) {
          if ((seen[q.value][0] ^ my_masks[q.value]) == 1) aborted[h.value] = true;
        }
      }
    } else {
      ctx_.Enter(Phase::kEcSyndrome);
      auto inputs = Zeros(s_len);
      inputs[alice_.value] = y;
      BitString o1 = ParityString(ctx_, inputs);
      for (PartyId h : holders) {
        if (h == alice_) continue;
        auto fixed = corrector->Correct(raw[h.value], o1);
        failed[h.value] = !fixed;
        corrected[h.value] = fixed ? *fixed : raw[h.value];
      }
      const std::size_t in_len = std::max<std::size_t>(raw_a.size(), static_cast<std::size_t>(D_.hash));
      ToeplitzHash hash(fabric_.BeaconSample(in_len, static_cast<std::size_t>(D_.hash)));
      BitString h_a = hash.Apply(Pad(raw_a, in_len));
      ctx_.Enter(Phase::kEcHash);
      inputs = Zeros(h_a.size());
      inputs[alice_.value] = h_a;
      BitString o2 = ParityString(ctx_, inputs);
      for (PartyId h : holders) {
        if (h == alice_) continue;
        BitString h_b = hash.Apply(Pad(corrected[h.value], in_len));
        if (failed[h.value] || o2 != h_b) view(h).v = true;
      }
      std::vector<BitString> payloads(n_);
      for (int t = 0; t < n_; ++t) {
        PartyId id(t);
        bool bob = id != alice_ && Believes(id);
        Bit b = bob && tokens[t] ? (*tokens[t])[0] : Coin(id);
        payloads[t] = BitString{static_cast<Bit>(bob ? (b ^ (view(id).v ? 1 : 0)) : b)};
      }
      auto seen = BroadcastAll(payloads);
      bool ok = o2 == h_a;
      for (PartyId b : bobs_) {
        if ((seen[b.value][0] ^ b_true[b.value]) == 1) ok = false;
      }
      AmdCode verdict(1, P_.eps_enc);
      BitString alice_in = r_empty ^ verdict.Encode(BitString{ok ? 0 : 1}, tape_.engine(alice_));
      ctx_.Enter(Phase::kEcVerdict);
      inputs = Zeros(alice_in.size());
      inputs[alice_.value] = alice_in;
      BitString o3 = ParityString(ctx_, inputs);
      aborted[alice_.value] = !ok || o3 != alice_in;
      for (PartyId h : holders) {
        if (h == alice_) continue;
        BitString pad = tokens[h.value] ? tokens[h.value]->slice(1, r_empty.size())
                                        : Rand(h, r_empty.size());
        auto d = verdict.Decode(pad ^ o3);
        aborted[h.value] = !d || (*d)[0] == 1;
      }
    }

    std::vector<PartyId> keep;
    std::vector<BitString> keys;
    for (PartyId h : holders) {
      view(h).raw_key = corrected[h.value];
      view(h).ec_abort = aborted[h.value];
      if (aborted[h.value]) continue;
      keep.push_back(h);
      keys.push_back(corrected[h.value]);
    }
    if (keep.size() < holders.size() && out_.abort_reason.empty()) {
      out_.abort_reason = v_s && !fully ? "secrecy verification failed"
                                        : "error correction verification failed";
    }
    Amplify(fully ? ProtocolKind::kFullyAcka : ProtocolKind::kAcka, keep, keys);
    Mark("");
    ClassifyParticipants();
  }

  void RunBacka() {
    if (!IdentityDesignation(false)) return;
    Mark("distribution");
    const auto lb = static_cast<std::size_t>(P_.l_b);
    BitString k_a = Rand(alice_, lb);
    for (int f = 0; f < n_; ++f) {
      for (int t = 0; t < n_; ++t) {
        if (f == t) continue;
        bool key = f == alice_.value && IsBob(PartyId(t));
        fabric_.SendPrivate(PartyId(f), PartyId(t), key ? k_a : Rand(PartyId(f), lb));
      }
    }
    view(alice_).conference_key = k_a;
    for (int t = 0; t < n_; ++t) {
      PartyChannel ch = fabric_.View(PartyId(t));
      for (int f = 0; f < n_; ++f) {
        if (f == t) continue;
        BitString got = ch.Receive(PartyId(f));
        const auto* r = std::get_if<InformedReceiverRole>(&view(PartyId(t)).role);
        if (r && r->sender == PartyId(f)) view(PartyId(t)).conference_key = got;
      }
    }
    out_.ell = out_.ell_net = P_.l_b;
    out_.ell_raw = static_cast<double>(P_.l_b);
    Mark("");
    ClassifyParticipants();
  }

  void RunBifully() {
    if (!IdentityDesignation(true)) return;
    const auto lb = static_cast<std::size_t>(P_.l_b);
    AmdCode code(lb, P_.eps_enc);
    BitString k_a = Rand(alice_, lb);
    BitString f_k = code.Encode(k_a, tape_.engine(alice_));
    bool v_a = false;
    std::vector<bool> notified(n_, false);
    std::vector<std::optional<BitString>> got(n_);
    std::vector<PartyId> order;
    for (int t = 0; t < n_; ++t) {
      if (t != alice_.value) order.emplace_back(t);
    }
    std::shuffle(order.begin(), order.end(), tape_.engine(alice_));
    Mark("distribution");
    for (std::size_t it = 0; it < order.size(); ++it) {
      PartyId s = order[it];
      ctx_.Enter(Phase::kBifullyNotification, static_cast<int>(it));
      auto y = Notify(ctx_, alice_, s, P_.r_n, cfg_.unnotified.count(s) > 0);
      ctx_.Enter(Phase::kBifullyDistribution, static_cast<int>(it));
      auto inputs = Zeros(f_k.size());
      BitString alice_mask = Rand(alice_, f_k.size());
      inputs[alice_.value] = IsBob(s) ? f_k : f_k ^ alice_mask;
      std::vector<BitString> own(n_);
      for (int t = 0; t < n_; ++t) {
        if (t == alice_.value || !y[t]) continue;
        notified[t] = true;
        if (Believes(PartyId(t))) {
          own[t] = Rand(PartyId(t), f_k.size());
          inputs[t] = own[t];
        }
      }
      BitString o = ParityString(ctx_, inputs);
      for (int t = 0; t < n_; ++t) {
        if (t == alice_.value || !y[t] || !Believes(PartyId(t))) continue;
        got[t] = code.Decode(o ^ own[t]);
        view(PartyId(t)).v = !got[t];
      }
      if (!IsBob(s) && !code.Decode(o ^ alice_mask)) v_a = true;
    }
    Mark("final");
    std::vector<Bit> vin(n_, 0);
    for (int t = 0; t < n_; ++t) {
      PartyId id(t);
      PartyView& pv = view(id);
      pv.notified = notified[t];
      if (id == alice_) {
        pv.v = v_a;
        vin[t] = v_a;
      } else if (Believes(id)) {
        if (!notified[t] || !got[t]) pv.v = true;
        vin[t] = pv.v;
      } else {
        vin[t] = notified[t] ? 0 : 1;
      }
    }
    ctx_.Enter(Phase::kFinalVeto);
    out_.ell = out_.ell_net = P_.l_b;
    out_.ell_raw = static_cast<double>(P_.l_b);
    if (Veto(ctx_, vin, P_.r_v).output) {
      out_.verification_abort = true;
      GlobalAbort("final veto");
    } else {
      view(alice_).conference_key = k_a;
      for (int t = 0; t < n_; ++t) {
        if (t != alice_.value && Believes(PartyId(t)) && got[t]) {
          view(PartyId(t)).conference_key = *got[t];
        }
      }
    }
    Mark("");
    ClassifyParticipants();
  }

  void ClassifyParticipants() {
    bool all = true, none = true;
    std::optional<BitString> first;
    bool equal = true;
    for (PartyId p : Participants()) {
      const auto& key = view(p).conference_key;
      if (key) {
        none = false;
        if (!first) first = *key;
        else if (*first != *key) equal = false;
      } else {
        all = false;
      }
    }
    out_.participants_ok = all;
    out_.participants_abort = none;
    out_.keys_equal = all && equal;
  }

  void Finish() {
    if (!stage_.empty()) Mark("");
    if (out_.id_abort) {
      out_.participants_abort = true;
      out_.participants_ok = false;
      out_.keys_equal = false;
    }
    out_.ledger = fabric_.ledger_report();
    out_.private_ones_received.resize(n_);
    for (int t = 0; t < n_; ++t) {
      out_.private_ones_received[t] = fabric_.private_ones_received(PartyId(t));
    }
    if (cfg_.transcript) out_.transcript = fabric_.transcript();
    if (cfg_.keep_broadcast_log) out_.broadcast_log = fabric_.broadcast_log();
  }

  RunConfig cfg_;
  ValidatedParams v_;
  const ProtocolParams& P_;
  const DerivedLengths& D_;
  int n_;
  ChannelFabric fabric_;
  PartyRandomness tape_;
  ScriptedAdversary adversary_;
  std::mt19937_64 source_rng_;
  std::mt19937_64 pool_rng_;
  NoiseModel noise_;
  SubprotocolContext ctx_;
  PartyId alice_;
  PartySet bobs_;
  RunOutcome out_;
  std::string stage_;
  std::int64_t mark_bits_ = 0;
  std::int64_t mark_ones_ = 0;
};

}  // namespace

RunOutcome RunProtocol(const RunConfig& config) {
  RunConfig cfg = config;
  if (cfg.receivers) cfg.params.m = static_cast<int>(cfg.receivers->size());
  return Runner(cfg).Run();
}

RunOutcome RunAcka(RunConfig config) {
  config.protocol = ProtocolKind::kAcka;
  return RunProtocol(config);
}

RunOutcome RunFullyAcka(RunConfig config) {
  config.protocol = ProtocolKind::kFullyAcka;
  return RunProtocol(config);
}

RunOutcome RunBacka(RunConfig config) {
  config.protocol = ProtocolKind::kBacka;
  return RunProtocol(config);
}

RunOutcome RunBifullyAcka(RunConfig config) {
  config.protocol = ProtocolKind::kBifullyAcka;
  return RunProtocol(config);
}

}  // namespace acka
