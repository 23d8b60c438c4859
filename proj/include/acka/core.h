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

#ifndef ACKA_CORE_H_
#define ACKA_CORE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>

namespace acka {

// Index of a party in the network, in [0, n).
struct PartyId {
  int value = 0;

  constexpr PartyId() = default;
  constexpr explicit PartyId(int v) : value(v) {}
  constexpr auto operator<=>(const PartyId&) const = default;
};

using PartySet = std::set<PartyId>;

// Role registers held by each party after identity designation.
struct SenderRole {
  PartySet receivers;
  bool operator==(const SenderRole&) const = default;
};
struct ReceiverRole {
  bool operator==(const ReceiverRole&) const = default;
};
struct InformedReceiverRole {
  PartyId sender;
  PartySet co_receivers;
  bool operator==(const InformedReceiverRole&) const = default;
};
struct NonParticipantRole {
  bool operator==(const NonParticipantRole&) const = default;
};
struct AbortedRole {
  bool operator==(const AbortedRole&) const = default;
};

using Role = std::variant<SenderRole, ReceiverRole, InformedReceiverRole,
                          NonParticipantRole, AbortedRole>;

std::string RoleName(const Role& role);

// Rejected configuration. `what()` names the violated invariant.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ProtocolParams {
  int n = 5;                  // parties
  int m = 2;                  // receivers
  std::int64_t L = 20000;     // detected GHZ rounds
  double p = 0.05;            // test-round probability
  double q_x = 0.02;          // GHZ phase-error threshold
  double q_z = 0.02;          // GHZ pairwise Z error rate
  double q_xb = 0.02;         // Bell-pair error rates (BB84 sub-channels)
  double q_zb = 0.02;
  double eta = 1.0;           // per-channel transmittance
  int r_v = 40;               // Veto iterations
  int r_n = 40;               // Notification iterations
  double eps_enc = 0x1p-32;   // AMD failure probability
  double eps_ec = 1e-10;
  double eps_pa = 1e-10;
  double eps_x = 1e-10;
  std::int64_t l_b = 128;     // key length of the Bell-pair benchmarks
  std::uint64_t seed = 1;

  bool operator==(const ProtocolParams&) const = default;
};

// Integer lengths derived from ProtocolParams. Every real-valued length is
// rounded up; ceil_log2 is applied term by term inside composite lengths.
struct DerivedLengths {
  std::int64_t testing_key = 0;   // ceil(L h(p))
  std::int64_t raw_key = 0;       // ceil(L (1-p))
  std::int64_t syndrome = 0;      // ceil(L (1-p) h(Q_Z))
  std::int64_t hash = 0;          // b_h = ceil(log2((n-1)/eps_EC))
  std::int64_t identity = 0;      // |d_t| = n - 1 + ceil(log2 n)
  std::int64_t identity_code = 0; // |F(d_t)|, identity string of ACKA-ID
  std::int64_t role_code = 0;     // |F(d_t)|, one-bit role of fully-ACKA-ID
  std::int64_t verdict_pad = 0;   // |r_empty| = 1 + 2 ceil(log2(1/eps_enc))
  std::int64_t ec_token = 0;      // |r_l| = |F(b_l, r_empty)|
  std::int64_t tkd_key = 0;       // |k_l| = testing_key + ec_token
  std::int64_t benchmark_code = 0;// |F(k_A)| for bifully-ACKA
  int half_n = 0;                 // floor(n/2)

  bool operator==(const DerivedLengths&) const = default;
};

struct ValidatedParams {
  ProtocolParams params;
  DerivedLengths lengths;

  bool operator==(const ValidatedParams&) const = default;
};

// h(x) = -x log2 x - (1-x) log2 (1-x); h(0) = h(1) = 0.
double BinaryEntropy(double x);

// 10^(-atten * d / 10) for a fiber of length d km.
double Transmittance(double distance_km, double atten_db_per_km = 0.17);

// ln C(a, b) for real a >= b >= 0 via log-gamma.
double LogBinomial(double a, double b);

// ceil(x) with a relative tolerance so that 29.999999999 is read as 30.
std::int64_t CeilLength(double x);
// ceil(log2(x)) for x >= 1, exact for powers of two.
int CeilLog2(double x);
int CeilLog2(std::uint64_t x);

// Codeword length of the AMD code for a message of `message_len` bits:
// message_len + 2 (ceil(log2 message_len) + ceil(log2 (1/eps_enc))).
std::int64_t AmdCodewordLength(std::int64_t message_len, double eps_enc);

ValidatedParams ValidateParams(const ProtocolParams& raw);

}  // namespace acka

#endif  // ACKA_CORE_H_
