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

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "acka/core.h"
#include "acka/rates.h"

namespace acka {
namespace {

double H(double x) { return x <= 0 || x >= 1 ? 0 : -x * std::log2(x) - (1 - x) * std::log2(1 - x); }
double LnC(double a, double b) { return std::lgamma(a + 1) - std::lgamma(b + 1) - std::lgamma(a - b + 1); }

// Independent root of the fluctuation equation in plain double precision.
double GammaOracle(double q, double L, double p, double eps) {
  auto f = [&](double g) {
    return LnC(L * (1 - p) * g + L * q, L * p * q) +
           LnC(L * (1 - q) - L * (1 - p) * g, L * p * (1 - q)) - LnC(L, L * p) - 2 * std::log(eps);
  };
  double lo = 0, hi = 1 - q;
  for (int i = 0; i < 200; ++i) {
    double mid = (lo + hi) / 2;
    (f(mid) > 0 ? lo : hi) = mid;
  }
  return lo;
}

TEST(Protocols, NamesRoundTrip) {
  for (auto k : {ProtocolKind::kAcka, ProtocolKind::kFullyAcka, ProtocolKind::kBacka,
                 ProtocolKind::kBifullyAcka}) {
    EXPECT_EQ(ParseProtocol(ProtocolName(k)), k);
  }
  EXPECT_THROW(ParseProtocol("cka"), ConfigError);
  EXPECT_TRUE(UsesGhz(ProtocolKind::kFullyAcka));
  EXPECT_FALSE(UsesGhz(ProtocolKind::kBacka));
}

TEST(Gamma, MatchesIndependentOracle) {
  for (double L : {1e3, 1e4, 1e5}) {
    for (double q : {0.01, 0.02, 0.1}) {
      for (double p : {0.05, 0.2}) {
        auto g = GammaFluctuation(q, L, p, 1e-10);
        EXPECT_FALSE(g.infeasible);
        EXPECT_NEAR(g.gamma, GammaOracle(q, L, p, 1e-10), 1e-8) << L << " " << q << " " << p;
        EXPECT_LT(std::fabs(g.residual), 1e-9);
      }
    }
  }
}

TEST(Gamma, PropertiesOverGrid) {
  for (double q : {0.0, 0.02, 0.2}) {
    double prev_L = INFINITY;
    for (double L : {1e4, 1e5, 1e6, 1e7}) {
      auto g = GammaFluctuation(q, L, 0.05, 1e-8);
      EXPECT_GE(g.gamma, 0.0);
      EXPECT_LT(g.gamma, prev_L);  // shrinks with more rounds
      prev_L = g.gamma;
    }
  }
  // Smaller eps_x means a wider fluctuation.
  EXPECT_GT(GammaFluctuation(0.02, 1e5, 0.05, 1e-12).gamma,
            GammaFluctuation(0.02, 1e5, 0.05, 1e-6).gamma);
}

TEST(Gamma, InfeasibleIsCapped) {
  auto g = GammaFluctuation(0.3, 20, 0.05, 1e-10);
  EXPECT_TRUE(g.infeasible);
  EXPECT_DOUBLE_EQ(g.gamma, 0.5 - 0.3);
}

TEST(Gamma, Preconditions) {
  EXPECT_THROW(GammaFluctuation(0.02, 1e4, 0.0, 1e-10), std::domain_error);
  EXPECT_THROW(GammaFluctuation(0.5, 1e4, 0.1, 1e-10), std::domain_error);
  EXPECT_THROW(GammaFluctuation(0.02, 5, 0.1, 1e-10), std::domain_error);
  EXPECT_THROW(GammaFluctuation(0.02, 1e4, 0.1, 0.0), std::domain_error);
}

TEST(FiniteKeyLength, FullyMatchesFormula) {
  ProtocolParams P;
  P.n = 5;
  P.L = 20000;
  P.p = 0.05;
  auto k = FiniteKeyLength(ProtocolKind::kFullyAcka, P);
  const double g = GammaOracle(0.02, 20000, 0.05, P.eps_x);
  const double want = 20000 * 0.95 * (1 - H(0.02 + g) - H(0.02)) - std::log2(2 * 4 / P.eps_ec) -
                      2 * std::log2(1 / (2 * P.eps_pa));
  EXPECT_NEAR(k.ell_raw, want, 1e-4);
  EXPECT_EQ(k.ell, static_cast<std::int64_t>(std::floor(want)));
  EXPECT_EQ(k.ell_net, k.ell);
}

TEST(FiniteKeyLength, AckaStepNineAndNet) {
  ProtocolParams P;
  P.L = 10000;
  P.p = 0.05;
  auto k = FiniteKeyLength(ProtocolKind::kAcka, P);
  const double g = GammaOracle(0.02, 10000, 0.05, P.eps_x);
  const double pa = 2 * std::log2(1 / (2 * P.eps_pa));
  EXPECT_NEAR(k.ell_raw, 9500 * (1 - H(0.02 + g)) - pa, 1e-4);
  const double net = 9500 * (1 - H(0.02 + g) - H(0.02)) - std::log2(8 / P.eps_ec) - pa -
                     10000 * H(0.05) - 5;
  EXPECT_NEAR(k.ell_net_raw, net, 1e-4);
}

TEST(FiniteKeyLength, ClampsAtZero) {
  ProtocolParams P;
  P.L = 50;
  P.p = 0.1;
  auto k = FiniteKeyLength(ProtocolKind::kFullyAcka, P);
  EXPECT_LT(k.ell_raw, 0);
  EXPECT_EQ(k.ell, 0);
  EXPECT_THROW(FiniteKeyLength(ProtocolKind::kBacka, P), std::invalid_argument);
}

TEST(EpsilonTotal, TermByTerm) {
  EpsComponents c;
  c.n = 5;
  c.r_v = 40;
  c.r_n = 30;
  c.eps_enc = 1e-12;
  c.eps_ec = 1e-10;
  c.eps_pa = 2e-10;
  c.eps_x = 3e-10;
  const double v = std::ldexp(1.0, -40), nn = std::ldexp(1.0, -29);
  EXPECT_NEAR(EpsilonTotal(ProtocolKind::kAcka, c).total, v + 4e-12 + 6e-10 + 1e-10 + 2e-10, 1e-22);
  EXPECT_NEAR(EpsilonTotal(ProtocolKind::kFullyAcka, c).total,
              4 * v + 4 * (6e-12 + nn) + 1e-10 + 18e-10 + 6e-10, 1e-22);
  EXPECT_NEAR(EpsilonTotal(ProtocolKind::kBacka, c).total, v + 4e-12, 1e-24);
  EXPECT_NEAR(EpsilonTotal(ProtocolKind::kBifullyAcka, c).total, 3 * v + 4 * (nn + 3e-12), 1e-22);
  double sum = 0;
  for (const auto& [name, value] : EpsilonTotal(ProtocolKind::kFullyAcka, c).terms) sum += value;
  EXPECT_NEAR(sum, EpsilonTotal(ProtocolKind::kFullyAcka, c).total, 1e-22);
}

TEST(AsymptoticRates, ErrorFreeFourParties) {
  auto r = ComputeAsymptoticRates(4, 1.0, 0, 0, 0, 0);
  EXPECT_DOUBLE_EQ(r.r, 1.0);
  EXPECT_DOUBLE_EQ(r.r_b, 1.0 / 6);
  EXPECT_DOUBLE_EQ(r.r_f, 1.0);
  EXPECT_DOUBLE_EQ(r.r_bf, 1.0 / 18);
  EXPECT_DOUBLE_EQ(r.r_cka, 1.0);
  EXPECT_DOUBLE_EQ(r.r_bcka, 0.5);
}

TEST(AsymptoticRates, EightPartiesAtEightKm) {
  const double eta = std::pow(10.0, -0.136);
  auto r = ComputeAsymptoticRates(8, eta, 0.02, 0.02, 0.02, 0.02);
  EXPECT_NEAR(r.r, 0.0585587, 1e-6);
  EXPECT_NEAR(r.r_b, 0.0273819, 1e-6);
  EXPECT_NEAR(r.r_f, 0.0411862, 1e-6);
  EXPECT_NEAR(r.r_bf, 0.0039117, 1e-7);
  EXPECT_NEAR(r.r_f / r.r_bf, 10.52898, 1e-4);
  EXPECT_NEAR(r.r / r.r_b, 2.138592, 1e-5);
}

TEST(AsymptoticRates, EvenNIdentity) {
  for (int n : {4, 6, 10, 20}) {
    for (double eta : {0.3, 0.77, 1.0}) {
      auto r = ComputeAsymptoticRates(n, eta, 0, 0, 0, 0);
      EXPECT_NEAR(r.r / r.r_b, 2 * (n - 1) * std::pow(eta, n - 2), 1e-12 * r.r / r.r_b);
    }
  }
}

TEST(AsymptoticRates, NegativeBracketsClamp) {
  auto r = ComputeAsymptoticRates(5, 1.0, 0.2, 0.2, 0.2, 0.2);
  EXPECT_EQ(r.r, 0.0);
  EXPECT_EQ(r.r_b, 0.0);
}

TEST(ChannelCounts, ClosedForms) {
  EXPECT_EQ(ParityBits(5, 10), 5 * 4 * 10);
  EXPECT_EQ(IdChannelUses(5, 40, 77), 25 * 4 * (120 + 77));
  EXPECT_EQ(TkdChannelUses(5, 40, 100), 25 * 16 * 40 + 5 * 16 * 100);
}

TEST(NetworkUses, BenchmarksApproachClosedForms) {
  ProtocolParams P;
  P.l_b = 1'000'000'000'000;
  const double bell = 1 - 2 * H(0.02);
  auto b = AnalyticNetworkUses(ProtocolKind::kBacka, P);
  EXPECT_NEAR(b.rate, 2 * bell / 20, 1e-7);
  auto bf = AnalyticNetworkUses(ProtocolKind::kBifullyAcka, P);
  EXPECT_NEAR(bf.rate, 2 * bell / 80, 1e-7);
}

TEST(NetworkUses, GhzUsesIncludeLoss) {
  ProtocolParams P;
  P.eta = 0.9;
  P.L = 100000;
  auto u = AnalyticNetworkUses(ProtocolKind::kAcka, P);
  EXPECT_NEAR(u.ghz_uses, 100000 / std::pow(0.9, 5), 1e-6);
  EXPECT_NEAR(u.total, u.ghz_uses + u.bell_uses, 1e-6);
  EXPECT_NEAR(u.rate, u.key_bits / u.total, 1e-15);
}

TEST(NetworkUses, InfeasibleWithoutBellSupply) {
  ProtocolParams P;
  P.q_xb = P.q_zb = 0.12;
  auto u = AnalyticNetworkUses(ProtocolKind::kBacka, P);
  EXPECT_FALSE(u.feasible);
  EXPECT_EQ(u.rate, 0.0);
}

TEST(AllocateEpsilon, StaysWithinTarget) {
  for (auto k : {ProtocolKind::kAcka, ProtocolKind::kFullyAcka, ProtocolKind::kBacka,
                 ProtocolKind::kBifullyAcka}) {
    for (double share : {1e-4, 1e-2, 0.1}) {
      ProtocolParams P = AllocateEpsilon(k, ProtocolParams{}, 1e-8, share, 0.6);
      EXPECT_LE(EpsilonTotal(k, ComponentsOf(P)).total, 1e-8) << ProtocolName(k);
    }
  }
}

TEST(OptimizeRate, DeterministicAndWithinBudget) {
  ChannelModel m;
  m.eta = Transmittance(2.0);
  auto a = OptimizeRate(ProtocolKind::kAcka, 1e8, m);
  auto b = OptimizeRate(ProtocolKind::kAcka, 1e8, m);
  EXPECT_EQ(a.rate, b.rate);
  EXPECT_EQ(a.L, b.L);
  EXPECT_LE(a.eps.total, 1e-8);
  EXPECT_LE(a.uses.total, 1e8 * (1 + 1e-9));
  EXPECT_GT(a.rate, 0.0);
  EXPECT_GT(a.p, 0.0);
  EXPECT_LE(a.p, 0.2);
}

TEST(OptimizeRate, RateGrowsWithBudget) {
  ChannelModel m;
  double prev = 0;
  for (double budget : {1e6, 1e8, 1e10}) {
    double r = OptimizeRate(ProtocolKind::kFullyAcka, budget, m).rate;
    EXPECT_GE(r, prev);
    prev = r;
  }
}

TEST(OptimizeRate, LargeBudgetNearAsymptote) {
  ChannelModel m;
  m.eta = Transmittance(2.0);
  auto r = OptimizeRate(ProtocolKind::kFullyAcka, 1e12, m);
  auto a = ComputeAsymptoticRates(5, m.eta, 0.02, 0.02, 0.02, 0.02);
  EXPECT_NEAR(r.rate / a.r_f, 1.0, 0.05);
}

TEST(Csv, Headers) {
  std::ostringstream f, a;
  WriteFiniteCsvHeader(f);
  WriteAsymptoticCsvHeader(a);
  EXPECT_EQ(f.str(), "protocol,n,d_km,f_or_Q_model,L_tot,rate,ell,p_opt,eps_tot\n");
  EXPECT_EQ(a.str(), "protocol_pair,n,d_km,ratio\n");
}

}  // namespace
}  // namespace acka
