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

#include "acka/rates.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <stdexcept>

#include "acka/quantum.h"

namespace acka {

const char* ProtocolName(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::kAcka: return "acka";
    case ProtocolKind::kFullyAcka: return "fully-acka";
    case ProtocolKind::kBacka: return "backa";
    case ProtocolKind::kBifullyAcka: return "bifully-acka";
  }
  return "unknown";
}

ProtocolKind ParseProtocol(const std::string& name) {
  if (name == "acka") return ProtocolKind::kAcka;
  if (name == "fully-acka") return ProtocolKind::kFullyAcka;
  if (name == "backa") return ProtocolKind::kBacka;
  if (name == "bifully-acka") return ProtocolKind::kBifullyAcka;
  throw ConfigError("protocol must be acka, fully-acka, backa or bifully-acka");
}

bool UsesGhz(ProtocolKind kind) {
  return kind == ProtocolKind::kAcka || kind == ProtocolKind::kFullyAcka;
}

namespace {

long double LnChoose(long double a, long double b) {
  return lgammal(a + 1.0L) - lgammal(b + 1.0L) - lgammal(a - b + 1.0L);
}

}  // namespace

long double GammaEquation(double gamma, double q_x, double L, double p,
                          double eps_x) {
  const long double l = L, q = q_x, pp = p, g = gamma;
  long double lhs = LnChoose(l * (1 - pp) * g + l * q, l * pp * q) +
                    LnChoose(l * (1 - q) - l * (1 - pp) * g, l * pp * (1 - q));
  long double rhs = LnChoose(l, l * pp) + 2.0L * logl(static_cast<long double>(eps_x));
  return lhs - rhs;
}

GammaSolve GammaFluctuation(double q_x, double L, double p, double eps_x) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("gamma needs 0 < p < 1");
  if (!(q_x >= 0.0 && q_x < 0.5)) throw std::domain_error("gamma needs Q_X in [0,1/2)");
  if (!(eps_x > 0.0 && eps_x <= 1.0)) throw std::domain_error("gamma needs eps_x in (0,1]");
  if (L * p < 1.0) throw std::domain_error("gamma needs L >= 1/p");
  GammaSolve out;
  long double f0 = GammaEquation(0.0, q_x, L, p, eps_x);
  if (f0 <= 0.0L) {
    out.residual = static_cast<double>(f0);
    return out;
  }
  double lo = 0.0;
  double hi = 1.0 - q_x;
  if (GammaEquation(hi, q_x, L, p, eps_x) > 0.0L) {
    out.gamma = 0.5 - q_x;
    out.infeasible = true;
    out.residual = static_cast<double>(GammaEquation(out.gamma, q_x, L, p, eps_x));
    return out;
  }
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (GammaEquation(mid, q_x, L, p, eps_x) > 0.0L) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  long double flo = GammaEquation(lo, q_x, L, p, eps_x);
  long double fhi = GammaEquation(hi, q_x, L, p, eps_x);
  bool pick_lo = fabsl(flo) <= fabsl(fhi);
  out.gamma = pick_lo ? lo : hi;
  out.residual = static_cast<double>(pick_lo ? flo : fhi);
  return out;
}

KeyLength FiniteKeyLength(ProtocolKind kind, const ProtocolParams& params) {
  if (!UsesGhz(kind)) throw std::invalid_argument("finite key length is for GHZ protocols");
  const double L = static_cast<double>(params.L);
  const double lk = L * (1.0 - params.p);
  KeyLength out;
  bool usable = params.p > 0.0 && params.p < 1.0 && L * params.p >= 1.0;
  double bracket_x = 0.0;
  if (usable) {
    GammaSolve g = GammaFluctuation(params.q_x, L, params.p, params.eps_x);
    out.gamma = g.gamma;
    double arg = params.q_x + g.gamma;
    bracket_x = arg >= 0.5 ? 0.0 : 1.0 - BinaryEntropy(arg);
  }
  const double pa = 2.0 * std::log2(1.0 / (2.0 * params.eps_pa));
  const double ec = std::log2(2.0 * (params.n - 1) / params.eps_ec);
  const double full =
      lk * (bracket_x - BinaryEntropy(params.q_z)) - ec - pa;
  if (kind == ProtocolKind::kAcka) {
    out.ell_raw = lk * bracket_x - pa;
    out.ell_net_raw = full - L * BinaryEntropy(params.p) - params.n;
  } else {
    out.ell_raw = full;
    out.ell_net_raw = full;
  }
  if (!usable) {
    out.ell_raw = std::min(out.ell_raw, 0.0);
    out.ell_net_raw = std::min(out.ell_net_raw, 0.0);
  }
  auto floor0 = [](double x) {
    return x <= 0.0 ? std::int64_t{0} : static_cast<std::int64_t>(std::floor(x));
  };
  out.ell = floor0(out.ell_raw);
  out.ell_net = floor0(out.ell_net_raw);
  return out;
}

EpsComponents ComponentsOf(const ProtocolParams& params) {
  EpsComponents c;
  c.n = params.n;
  c.r_v = params.r_v;
  c.r_n = params.r_n;
  c.eps_enc = params.eps_enc;
  c.eps_ec = params.eps_ec;
  c.eps_pa = params.eps_pa;
  c.eps_x = params.eps_x;
  return c;
}

EpsilonReport EpsilonTotal(ProtocolKind kind, const EpsComponents& c) {
  EpsilonReport out;
  const double m1 = c.n - 1;
  auto& t = out.terms;
  switch (kind) {
    case ProtocolKind::kAcka:
      t["veto"] = std::exp2(-c.r_v);
      t["enc"] = m1 * c.eps_enc;
      t["x"] = 2.0 * c.eps_x;
      t["ec"] = c.eps_ec;
      t["pa"] = c.eps_pa;
      break;
    case ProtocolKind::kFullyAcka:
      t["veto"] = std::exp2(-(c.r_v - 2.0));
      t["enc"] = m1 * 6.0 * c.eps_enc;
      t["notify"] = m1 * std::exp2(-(c.r_n - 1.0));
      t["ec"] = c.eps_ec;
      t["x"] = 6.0 * c.eps_x;
      t["pa"] = 3.0 * c.eps_pa;
      break;
    case ProtocolKind::kBacka:
      t["veto"] = std::exp2(-c.r_v);
      t["enc"] = m1 * c.eps_enc;
      break;
    case ProtocolKind::kBifullyAcka:
      t["veto"] = 3.0 * std::exp2(-c.r_v);
      t["notify"] = m1 * std::exp2(-(c.r_n - 1.0));
      t["enc"] = m1 * 3.0 * c.eps_enc;
      break;
  }
  for (const auto& [name, value] : t) out.total += value;
  return out;
}

AsymptoticRates ComputeAsymptoticRates(int n, double eta, double q_x, double q_z,
                                       double q_xb, double q_zb) {
  if (n < 2) throw std::invalid_argument("asymptotic rates need n >= 2");
  const double ghz = std::max(0.0, 1.0 - BinaryEntropy(q_x) - BinaryEntropy(q_z));
  const double bell = std::max(0.0, 1.0 - BinaryEntropy(q_xb) - BinaryEntropy(q_zb));
  const double half = static_cast<double>(n / 2);
  const double nn1 = static_cast<double>(n) * (n - 1);
  const double eta_n = std::pow(eta, n);
  AsymptoticRates r;
  r.r = eta_n * ghz;
  r.r_b = half * eta * eta * bell / nn1;
  if (bell > 0.0) {
    r.r_f = eta_n * ghz /
            (1.0 + nn1 * std::pow(eta, n - 2) * BinaryEntropy(q_z) / (half * bell));
  }
  r.r_bf = half * eta * eta * bell / (nn1 * (n - 1));
  r.r_cka = eta_n * ghz;
  r.r_bcka = 0.5 * eta * eta * bell;
  return r;
}

ScalingRatios ComputeScalingRatios(int n, double eta) {
  if (n < 2) throw std::invalid_argument("scaling ratios need n >= 2");
  const double base = 2.0 * std::pow(eta, n - 2);
  return ScalingRatios{base, base * (n - 1), base * (n - 1) * (n - 1)};
}

std::int64_t ParityBits(int n, std::int64_t rounds) {
  return static_cast<std::int64_t>(n) * (n - 1) * rounds;
}

std::int64_t IdChannelUses(int n, int r_v, std::int64_t code_len) {
  return static_cast<std::int64_t>(n) * n * (n - 1) * (3 * r_v + code_len);
}

std::int64_t TkdChannelUses(int n, int r_n, std::int64_t key_len) {
  const std::int64_t n1 = n - 1;
  return static_cast<std::int64_t>(n) * n * n1 * n1 * r_n + n * n1 * n1 * key_len;
}

namespace {

double PrivateBits(ProtocolKind kind, const ProtocolParams& p,
                   const DerivedLengths& d) {
  const double n = p.n;
  const double parity = n * (n - 1);
  const double test_rounds = static_cast<double>(p.L) * p.p;
  switch (kind) {
    case ProtocolKind::kAcka:
      return static_cast<double>(IdChannelUses(p.n, p.r_v, d.identity_code)) +
             parity * (static_cast<double>(d.testing_key) + test_rounds);
    case ProtocolKind::kFullyAcka:
      return static_cast<double>(IdChannelUses(p.n, p.r_v, d.role_code)) +
             static_cast<double>(TkdChannelUses(p.n, p.r_n, d.tkd_key)) +
             parity * (static_cast<double>(d.testing_key) + test_rounds +
                       n * p.r_v + static_cast<double>(d.syndrome + d.hash + d.verdict_pad));
    case ProtocolKind::kBacka:
      return static_cast<double>(IdChannelUses(p.n, p.r_v, d.identity_code)) +
             parity * static_cast<double>(p.l_b);
    case ProtocolKind::kBifullyAcka:
      return static_cast<double>(IdChannelUses(p.n, p.r_v, d.role_code)) +
             parity * ((n - 1) * (n * p.r_n + static_cast<double>(d.benchmark_code)) +
                       n * p.r_v);
  }
  return 0.0;
}

}  // namespace

NetworkUses AnalyticNetworkUses(ProtocolKind kind, const ProtocolParams& params) {
  const ValidatedParams v = ValidateParams(params);
  NetworkUses out;
  const double supply = BellSecretBitSupply(params.n, params.eta, params.q_xb, params.q_zb);
  out.private_bits = PrivateBits(kind, params, v.lengths);
  if (UsesGhz(kind)) {
    out.ghz_uses = static_cast<double>(params.L) / std::pow(params.eta, params.n);
    KeyLength k = FiniteKeyLength(kind, params);
    out.key_bits = static_cast<double>(kind == ProtocolKind::kAcka ? k.ell_net : k.ell);
  } else {
    out.key_bits = static_cast<double>(params.l_b);
  }
  if (supply <= 0.0) {
    out.feasible = false;
    out.bell_uses = std::numeric_limits<double>::infinity();
    out.total = out.bell_uses;
    return out;
  }
  out.bell_uses = out.private_bits / supply;
  out.total = out.ghz_uses + out.bell_uses;
  out.rate = out.key_bits / out.total;
  return out;
}

NetworkUses MeasuredNetworkUses(const CostReport& ledger, const ProtocolParams& params,
                                double key_bits) {
  NetworkUses out;
  const double supply = BellSecretBitSupply(params.n, params.eta, params.q_xb, params.q_zb);
  out.ghz_uses = static_cast<double>(ledger.ghz_network_uses);
  out.private_bits = static_cast<double>(ledger.private_bits_consumed);
  out.key_bits = key_bits;
  if (supply <= 0.0) {
    out.feasible = false;
    out.bell_uses = out.total = std::numeric_limits<double>::infinity();
    return out;
  }
  out.bell_uses = out.private_bits / supply;
  out.total = out.ghz_uses + out.bell_uses;
  out.rate = out.total > 0.0 ? key_bits / out.total : 0.0;
  return out;
}

namespace {

int ClassicalTerms(ProtocolKind kind) {
  return kind == ProtocolKind::kFullyAcka || kind == ProtocolKind::kBifullyAcka ? 3 : 2;
}

int CeilLog2Ratio(double x) { return static_cast<int>(std::ceil(std::log2(x) - 1e-12)); }

}  // namespace

ProtocolParams AllocateEpsilon(ProtocolKind kind, ProtocolParams base,
                               double eps_target, double classical_share,
                               double x_share) {
  const int k = ClassicalTerms(kind);
  const double each = eps_target * classical_share / k;
  const double m1 = base.n - 1;
  switch (kind) {
    case ProtocolKind::kAcka:
    case ProtocolKind::kBacka:
      base.r_v = std::max(1, CeilLog2Ratio(1.0 / each));
      base.eps_enc = std::exp2(-CeilLog2Ratio(m1 / each));
      break;
    case ProtocolKind::kFullyAcka:
      base.r_v = std::max(3, CeilLog2Ratio(1.0 / each) + 2);
      base.r_n = std::max(2, CeilLog2Ratio(m1 / each) + 1);
      base.eps_enc = std::exp2(-CeilLog2Ratio(6.0 * m1 / each));
      break;
    case ProtocolKind::kBifullyAcka:
      base.r_v = std::max(1, CeilLog2Ratio(3.0 / each));
      base.r_n = std::max(2, CeilLog2Ratio(m1 / each) + 1);
      base.eps_enc = std::exp2(-CeilLog2Ratio(3.0 * m1 / each));
      break;
  }
  if (UsesGhz(kind)) {
    const double used = EpsilonTotal(kind, [&] {
      EpsComponents c = ComponentsOf(base);
      c.eps_ec = c.eps_pa = c.eps_x = 0.0;
      return c;
    }()).total;
    const double rest = std::max(0.0, eps_target - used) * (1.0 - 1e-12);
    const double x_coef = kind == ProtocolKind::kAcka ? 2.0 : 6.0;
    const double pa_coef = kind == ProtocolKind::kAcka ? 1.0 : 3.0;
    base.eps_x = x_share * rest / x_coef;
    base.eps_ec = (1.0 - x_share) * rest / 2.0;
    base.eps_pa = (1.0 - x_share) * rest / 2.0 / pa_coef;
  }
  return base;
}

namespace {

ProtocolParams BaseParams(const ChannelModel& m) {
  ProtocolParams p;
  p.n = m.n;
  p.m = 1;
  p.eta = m.eta;
  p.q_x = m.q_x;
  p.q_z = m.q_z;
  p.q_xb = m.q_xb;
  p.q_zb = m.q_zb;
  return p;
}

// Largest L whose analytic cost fits the budget; 0 if none.
std::int64_t SolveL(ProtocolKind kind, ProtocolParams p, double budget) {
  auto cost = [&](std::int64_t L) {
    p.L = L;
    return AnalyticNetworkUses(kind, p).total;
  };
  const std::int64_t a = 1000, b = 2000;
  double ca = cost(a), cb = cost(b);
  double slope = (cb - ca) / static_cast<double>(b - a);
  if (!(slope > 0.0)) return 0;
  double guess = a + (budget - ca) / slope;
  if (guess < 1.0) return 0;
  std::int64_t L = static_cast<std::int64_t>(std::floor(guess));
  for (int it = 0; it < 64 && L >= 1 && cost(L) > budget; ++it) {
    double over = cost(L) - budget;
    L -= std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(over / slope)));
  }
  return L >= 1 && cost(L) <= budget ? L : 0;
}

std::int64_t SolveLb(ProtocolKind kind, ProtocolParams p, double budget) {
  auto cost = [&](std::int64_t lb) {
    p.l_b = lb;
    return AnalyticNetworkUses(kind, p).total;
  };
  const double supply = BellSecretBitSupply(p.n, p.eta, p.q_xb, p.q_zb);
  if (supply <= 0.0) return 0;
  double per_bit = (cost(2000) - cost(1000)) / 1000.0;
  double base = cost(1) - per_bit;
  if (!(per_bit > 0.0) || budget <= base) return 0;
  std::int64_t lb = static_cast<std::int64_t>(std::floor((budget - base) / per_bit));
  for (int it = 0; it < 64 && lb >= 1 && cost(lb) > budget; ++it) {
    double over = cost(lb) - budget;
    lb -= std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(over / per_bit)));
  }
  return lb >= 1 && cost(lb) <= budget ? lb : 0;
}

RateReport Evaluate(ProtocolKind kind, ProtocolParams p, double budget) {
  RateReport r;
  r.protocol = kind;
  r.L_tot = budget;
  if (UsesGhz(kind)) {
    p.L = SolveL(kind, p, budget);
    if (p.L < 1 || p.L * p.p < 1.0) {
      p.L = std::max<std::int64_t>(p.L, 1);
      r.params_used = p;
      r.p = p.p;
      return r;
    }
    KeyLength k = FiniteKeyLength(kind, p);
    r.uses = AnalyticNetworkUses(kind, p);
    r.ell = static_cast<double>(k.ell);
    r.ell_net = static_cast<double>(kind == ProtocolKind::kAcka ? k.ell_net : k.ell);
  } else {
    p.l_b = SolveLb(kind, p, budget);
    if (p.l_b < 1) {
      p.l_b = 1;
      r.params_used = p;
      return r;
    }
    r.uses = AnalyticNetworkUses(kind, p);
    r.ell = r.ell_net = static_cast<double>(p.l_b);
  }
  r.L = p.L;
  r.l_b = p.l_b;
  r.p = p.p;
  r.params_used = p;
  r.rate = r.uses.total > 0.0 ? r.ell_net / r.uses.total : 0.0;
  return r;
}

}  // namespace

RateReport OptimizeRate(ProtocolKind kind, double L_tot_budget,
                        const ChannelModel& model, double eps_target) {
  const ProtocolParams base = BaseParams(model);
  RateReport best;
  best.protocol = kind;
  best.L_tot = L_tot_budget;
  best.params_used = base;
  bool have = false;
  auto consider = [&](const RateReport& r) {
    if (!have || r.rate > best.rate) {
      best = r;
      have = true;
    }
  };
  if (!UsesGhz(kind)) {
    ProtocolParams p = AllocateEpsilon(kind, base, eps_target, 1.0, 0.0);
    consider(Evaluate(kind, p, L_tot_budget));
  } else {
    const double classical[] = {1e-4, 1e-3, 1e-2, 1e-1};
    const double x_shares[] = {1.0 / 3.0, 0.6, 0.9, 0.98};
    const double log_lo = std::log(1e-7), log_hi = std::log(0.2);
    const int grid = 36;
    for (double c : classical) {
      for (double xs : x_shares) {
        ProtocolParams alloc = AllocateEpsilon(kind, base, eps_target, c, xs);
        auto at = [&](double log_p) {
          ProtocolParams q = alloc;
          q.p = std::exp(log_p);
          return Evaluate(kind, q, L_tot_budget);
        };
        int best_i = 0;
        double best_rate = -1.0;
        std::vector<RateReport> coarse;
        for (int i = 0; i <= grid; ++i) {
          coarse.push_back(at(log_lo + (log_hi - log_lo) * i / grid));
          if (coarse.back().rate > best_rate) {
            best_rate = coarse.back().rate;
            best_i = i;
          }
          consider(coarse.back());
        }
        if (best_rate <= 0.0) continue;
        double a = log_lo + (log_hi - log_lo) * std::max(0, best_i - 1) / grid;
        double b = log_lo + (log_hi - log_lo) * std::min(grid, best_i + 1) / grid;
        const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
        RateReport f1 = at(x1), f2 = at(x2);
        for (int it = 0; it < 40; ++it) {
          if (f1.rate >= f2.rate) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = at(x1);
          } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = at(x2);
          }
        }
        consider(f1);
        consider(f2);
      }
    }
  }
  best.eps = EpsilonTotal(kind, ComponentsOf(best.params_used));
  if (best.rate <= 0.0) {
    best.rate = 0.0;
    best.ell = best.ell_net = 0.0;
  }
  return best;
}

void WriteFiniteCsvHeader(std::ostream& out) {
  out << "protocol,n,d_km,f_or_Q_model,L_tot,rate,ell,p_opt,eps_tot\n";
}

void WriteFiniteCsvRow(std::ostream& out, const RateReport& r, double d_km,
                       const std::string& model) {
  auto old = out.precision(9);
  out << ProtocolName(r.protocol) << ',' << r.params_used.n << ',' << d_km << ','
      << model << ',' << r.L_tot << ',' << r.rate << ',' << r.ell_net << ','
      << (UsesGhz(r.protocol) ? r.p : 0.0) << ',' << r.eps.total << '\n';
  out.precision(old);
}

void WriteAsymptoticCsvHeader(std::ostream& out) {
  out << "protocol_pair,n,d_km,ratio\n";
}

}  // namespace acka
