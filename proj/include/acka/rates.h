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

#ifndef ACKA_RATES_H_
#define ACKA_RATES_H_

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "acka/core.h"
#include "acka/netsim.h"

namespace acka {

enum class ProtocolKind { kAcka, kFullyAcka, kBacka, kBifullyAcka };

const char* ProtocolName(ProtocolKind kind);
ProtocolKind ParseProtocol(const std::string& name);
bool UsesGhz(ProtocolKind kind);

struct GammaSolve {
  double gamma = 0.0;
  double residual = 0.0;   // f(gamma) of the root equation, natural log units
  bool infeasible = false; // no root below 1 - Q_X; gamma is capped
};

// Positive root of
//   ln C(L(1-p)g + L Q, L p Q) + ln C(L(1-Q) - L(1-p)g, L p (1-Q))
//     = ln C(L, L p) + 2 ln eps_x.
// The left side decreases in g, so the root is bracketed on [0, 1 - Q] and
// found by bisection in extended precision. Returns 0 when the left side at
// g = 0 already lies below the right side.
GammaSolve GammaFluctuation(double q_x, double L, double p, double eps_x);
// Left minus right side of the root equation at `gamma`.
long double GammaEquation(double gamma, double q_x, double L, double p,
                          double eps_x);

struct KeyLength {
  double gamma = 0.0;
  double ell_raw = 0.0;      // before flooring, may be negative
  double ell_net_raw = 0.0;
  std::int64_t ell = 0;      // floored, clamped at 0
  std::int64_t ell_net = 0;
};

// ACKA: ell is the output length of privacy amplification,
//   L(1-p)[1 - h(Q_X + g)] - 2 log2(1/(2 eps_PA)),
// and ell_net subtracts the consumed pre-shared key:
//   L(1-p)[1 - h(Q_X + g) - h(Q_Z)] - log2(2(n-1)/eps_EC)
//     - 2 log2(1/(2 eps_PA)) - L h(p) - n.
// fully-ACKA: ell = ell_net = the same expression without the last two terms.
KeyLength FiniteKeyLength(ProtocolKind kind, const ProtocolParams& params);

struct EpsilonReport {
  double total = 0.0;
  std::map<std::string, double> terms;
};

struct EpsComponents {
  int n = 5;
  double r_v = 40;   // infinity gives a zero term
  double r_n = 40;
  double eps_enc = 0.0;
  double eps_ec = 0.0;
  double eps_pa = 0.0;
  double eps_x = 0.0;
};

EpsComponents ComponentsOf(const ProtocolParams& params);
EpsilonReport EpsilonTotal(ProtocolKind kind, const EpsComponents& c);

struct AsymptoticRates {
  double r = 0.0;       // ACKA
  double r_b = 0.0;     // bACKA
  double r_f = 0.0;     // fully-ACKA
  double r_bf = 0.0;    // bifully-ACKA
  double r_cka = 0.0;   // GHZ conference key agreement without anonymity
  double r_bcka = 0.0;  // the same from Bell pairs
};

AsymptoticRates ComputeAsymptoticRates(int n, double eta, double q_x, double q_z,
                                       double q_xb, double q_zb);

struct ScalingRatios {
  double cka = 0.0;    // 2 eta^(n-2)
  double acka = 0.0;   // 2 (n-1) eta^(n-2)
  double fully = 0.0;  // 2 (n-1)^2 eta^(n-2)
};

ScalingRatios ComputeScalingRatios(int n, double eta);

// Private-channel bits each sub-protocol consumes, in closed form.
std::int64_t ParityBits(int n, std::int64_t rounds);
std::int64_t IdChannelUses(int n, int r_v, std::int64_t code_len);
std::int64_t TkdChannelUses(int n, int r_n, std::int64_t key_len);

struct NetworkUses {
  double ghz_uses = 0.0;
  double private_bits = 0.0;
  double bell_uses = 0.0;
  double total = 0.0;
  double key_bits = 0.0;  // ell_net for ACKA, ell otherwise, L_b for benchmarks
  double rate = 0.0;
  bool feasible = true;
};

// Analytic accounting. GHZ uses are L / eta^n; private bits are converted to
// Bell uses at BellSecretBitSupply. Test rounds are counted as L p.
NetworkUses AnalyticNetworkUses(ProtocolKind kind, const ProtocolParams& params);
// Simulation accounting from a measured ledger.
NetworkUses MeasuredNetworkUses(const CostReport& ledger, const ProtocolParams& params,
                                double key_bits);

struct ChannelModel {
  int n = 5;
  double eta = 1.0;
  double q_x = 0.02;
  double q_z = 0.02;
  double q_xb = 0.02;
  double q_zb = 0.02;
};

struct RateReport {
  ProtocolKind protocol = ProtocolKind::kAcka;
  double L_tot = 0.0;
  double ell = 0.0;
  double ell_net = 0.0;
  double rate = 0.0;
  double p = 0.0;
  std::int64_t L = 0;
  std::int64_t l_b = 0;
  EpsilonReport eps;
  NetworkUses uses;
  ProtocolParams params_used;
};

// Maximizes the key rate at a fixed budget of network uses subject to
// EpsilonTotal <= eps_target. Deterministic.
RateReport OptimizeRate(ProtocolKind kind, double L_tot_budget,
                        const ChannelModel& model, double eps_target = 1e-8);

// Default split of an epsilon target over the additive terms.
ProtocolParams AllocateEpsilon(ProtocolKind kind, ProtocolParams base,
                               double eps_target, double classical_share,
                               double x_share);

void WriteFiniteCsvHeader(std::ostream& out);
void WriteFiniteCsvRow(std::ostream& out, const RateReport& report, double d_km,
                       const std::string& model);
void WriteAsymptoticCsvHeader(std::ostream& out);

}  // namespace acka

#endif  // ACKA_RATES_H_
