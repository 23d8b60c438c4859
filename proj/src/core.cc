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

#include "acka/core.h"

#include <algorithm>
#include <cmath>

namespace acka {

std::string RoleName(const Role& role) {
  struct Visitor {
    std::string operator()(const SenderRole&) const { return "sender"; }
    std::string operator()(const ReceiverRole&) const { return "receiver"; }
    std::string operator()(const InformedReceiverRole&) const {
      return "receiver-informed";
    }
    std::string operator()(const NonParticipantRole&) const {
      return "non-participant";
    }
    std::string operator()(const AbortedRole&) const { return "aborted"; }
  };
  return std::visit(Visitor{}, role);
}

double BinaryEntropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error("binary entropy argument outside [0,1]");
  }
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double Transmittance(double distance_km, double atten_db_per_km) {
  if (distance_km < 0.0 || atten_db_per_km < 0.0) {
    throw std::domain_error("distance and attenuation must be non-negative");
  }
  return std::pow(10.0, -atten_db_per_km * distance_km / 10.0);
}

double LogBinomial(double a, double b) {
  if (b < 0.0 || a < b) throw std::domain_error("LogBinomial needs a >= b >= 0");
  return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0);
}

std::int64_t CeilLength(double x) {
  double slack = 1e-9 * std::max(1.0, std::fabs(x));
  return static_cast<std::int64_t>(std::ceil(x - slack));
}

int CeilLog2(std::uint64_t x) {
  if (x == 0) throw std::domain_error("CeilLog2 of zero");
  int k = 0;
  while ((std::uint64_t{1} << k) < x) ++k;
  return k;
}

int CeilLog2(double x) {
  if (!(x >= 1.0)) throw std::domain_error("CeilLog2 needs x >= 1");
  return static_cast<int>(CeilLength(std::log2(x)));
}

std::int64_t AmdCodewordLength(std::int64_t message_len, double eps_enc) {
  if (message_len < 1) throw std::domain_error("AMD message must be nonempty");
  return message_len +
         2 * (CeilLog2(static_cast<std::uint64_t>(message_len)) +
              CeilLog2(1.0 / eps_enc));
}

namespace {

void Require(bool ok, const char* invariant) {
  if (!ok) throw ConfigError(invariant);
}

bool InOpenUnit(double e) { return e > 0.0 && e < 1.0; }

}  // namespace

ValidatedParams ValidateParams(const ProtocolParams& raw) {
  Require(raw.n >= 3, "n must be at least 3");
  Require(raw.m >= 1 && raw.m < raw.n, "m must be in [1, n)");
  Require(raw.L >= 1, "L must be positive");
  Require(raw.p >= 0.0 && raw.p <= 1.0, "p must be in [0,1]");
  Require(raw.q_x >= 0.0 && raw.q_x < 0.5, "Q_X must be in [0,1/2)");
  Require(raw.q_z >= 0.0 && raw.q_z < 0.5, "Q_Z must be in [0,1/2)");
  Require(raw.q_xb >= 0.0 && raw.q_xb < 0.5, "Q_Xb must be in [0,1/2)");
  Require(raw.q_zb >= 0.0 && raw.q_zb < 0.5, "Q_Zb must be in [0,1/2)");
  Require(raw.eta > 0.0 && raw.eta <= 1.0, "eta must be in (0,1]");
  Require(raw.r_v >= 1, "r_V must be positive");
  Require(raw.r_n >= 1, "r_N must be positive");
  Require(InOpenUnit(raw.eps_enc), "eps_enc must be in (0,1)");
  Require(InOpenUnit(raw.eps_ec), "eps_EC must be in (0,1)");
  Require(InOpenUnit(raw.eps_pa), "eps_PA must be in (0,1)");
  Require(InOpenUnit(raw.eps_x), "eps_x must be in (0,1)");
  Require(raw.l_b >= 1, "L_b must be positive");
  ValidatedParams v;
  v.params = raw;
  DerivedLengths& d = v.lengths;
  const double L = static_cast<double>(raw.L);
  const int log_inv_enc = CeilLog2(1.0 / raw.eps_enc);
  d.testing_key = CeilLength(L * BinaryEntropy(raw.p));
  d.raw_key = CeilLength(L * (1.0 - raw.p));
  d.syndrome = CeilLength(L * (1.0 - raw.p) * BinaryEntropy(raw.q_z));
  d.hash = CeilLog2((raw.n - 1) / raw.eps_ec);
  d.identity = raw.n - 1 + CeilLog2(static_cast<std::uint64_t>(raw.n));
  d.identity_code = AmdCodewordLength(d.identity, raw.eps_enc);
  d.role_code = AmdCodewordLength(1, raw.eps_enc);
  d.verdict_pad = 1 + 2 * static_cast<std::int64_t>(log_inv_enc);
  d.ec_token = AmdCodewordLength(1 + d.verdict_pad, raw.eps_enc);
  d.tkd_key = d.testing_key + d.ec_token;
  d.benchmark_code = AmdCodewordLength(raw.l_b, raw.eps_enc);
  d.half_n = raw.n / 2;
  return v;
}

}  // namespace acka
