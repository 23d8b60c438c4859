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

#include "acka/quantum.h"

#include <cmath>
#include <stdexcept>

namespace acka {

DirectRates EffectiveRates(const NoiseModel& noise, int n) {
  if (const auto* d = std::get_if<DirectRates>(&noise)) return *d;
  const auto& pq = std::get<PauliPerQubit>(noise);
  DirectRates out;
  out.q_x = (1.0 - std::pow(1.0 - 2.0 * pq.q_phase, n)) / 2.0;
  out.q_z = 2.0 * pq.q_bit * (1.0 - pq.q_bit);
  return out;
}

void ValidateNoise(const NoiseModel& noise) {
  if (const auto* d = std::get_if<DirectRates>(&noise)) {
    if (!(d->q_x >= 0.0 && d->q_x < 0.5)) throw ConfigError("noise Q_X must be in [0,1/2)");
    if (!(d->q_z >= 0.0 && d->q_z < 0.5)) throw ConfigError("noise Q_Z must be in [0,1/2)");
    return;
  }
  const auto& pq = std::get<PauliPerQubit>(noise);
  if (!(pq.q_phase >= 0.0 && pq.q_phase < 0.5)) {
    throw ConfigError("q_phase must be in [0,1/2)");
  }
  if (!(pq.q_bit >= 0.0 && pq.q_bit < 0.5)) throw ConfigError("q_bit must be in [0,1/2)");
}

namespace {

Bit Coin(std::mt19937_64& rng) { return static_cast<Bit>(rng() >> 63); }

Bit Flip(double prob, std::mt19937_64& rng) {
  if (prob <= 0.0) return 0;
  return std::bernoulli_distribution(prob)(rng) ? 1 : 0;
}

int ReferenceParty(const std::vector<Basis>& bases, std::optional<PartyId> reference) {
  if (reference) {
    if (bases.at(reference->value) != Basis::kZ) {
      throw std::invalid_argument("reference party must measure Z");
    }
    return reference->value;
  }
  for (std::size_t t = 0; t < bases.size(); ++t) {
    if (bases[t] == Basis::kZ) return static_cast<int>(t);
  }
  return -1;
}

}  // namespace

std::vector<Bit> SampleDetectedOutcomes(const NoiseModel& noise,
                                        const std::vector<Basis>& bases,
                                        std::mt19937_64& rng,
                                        std::optional<PartyId> reference) {
  const int n = static_cast<int>(bases.size());
  std::vector<Bit> out(n);
  const int ref = ReferenceParty(bases, reference);
  const auto* pq = std::get_if<PauliPerQubit>(&noise);
  if (ref < 0) {
    Bit parity = 0;
    for (int t = 0; t < n - 1; ++t) {
      out[t] = Coin(rng);
      parity ^= out[t];
    }
    Bit odd = pq ? 0 : Flip(std::get<DirectRates>(noise).q_x, rng);
    if (pq) {
      for (int t = 0; t < n; ++t) odd ^= Flip(pq->q_phase, rng);
    }
    out[n - 1] = parity ^ odd;
    return out;
  }
  Bit common = Coin(rng);
  for (int t = 0; t < n; ++t) {
    if (bases[t] == Basis::kX) {
      out[t] = Coin(rng);
    } else if (pq) {
      out[t] = common ^ Flip(pq->q_bit, rng);
    } else if (t == ref) {
      out[t] = common;
    } else {
      out[t] = common ^ Flip(std::get<DirectRates>(noise).q_z, rng);
    }
  }
  return out;
}

RoundSample SampleGhzRound(int n, double eta, const NoiseModel& noise,
                           const std::vector<Basis>& bases, std::mt19937_64& rng,
                           std::optional<PartyId> reference) {
  if (static_cast<int>(bases.size()) != n) {
    throw std::invalid_argument("one basis per party required");
  }
  RoundSample s;
  double detect = std::pow(eta, n);
  s.detected = detect >= 1.0 || std::bernoulli_distribution(detect)(rng);
  if (s.detected) s.outcomes = SampleDetectedOutcomes(noise, bases, rng, reference);
  return s;
}

std::int64_t AttemptsUntilDetected(double detect_prob, std::mt19937_64& rng) {
  if (!(detect_prob > 0.0 && detect_prob <= 1.0)) {
    throw std::invalid_argument("detection probability must be in (0,1]");
  }
  if (detect_prob >= 1.0) return 1;
  return 1 + std::geometric_distribution<std::int64_t>(detect_prob)(rng);
}

double BellSecretBitSupply(int n, double eta, double q_xb, double q_zb) {
  double bracket = 1.0 - BinaryEntropy(q_xb) - BinaryEntropy(q_zb);
  if (bracket <= 0.0) return 0.0;
  return static_cast<double>(n / 2) * eta * eta * bracket;
}

std::vector<double> JointDistributionOracle(int n, const NoiseModel& noise,
                                            const std::vector<Basis>& bases,
                                            std::optional<PartyId> reference) {
  if (n < 1 || n > 4) throw std::invalid_argument("oracle supports n <= 4");
  if (static_cast<int>(bases.size()) != n) {
    throw std::invalid_argument("one basis per party required");
  }
  const std::size_t outcomes = std::size_t{1} << n;
  std::vector<double> dist(outcomes, 0.0);
  const int ref = ReferenceParty(bases, reference);
  const DirectRates eff = EffectiveRates(noise, n);
  const auto* pq = std::get_if<PauliPerQubit>(&noise);
  for (std::size_t idx = 0; idx < outcomes; ++idx) {
    auto bit = [&](int t) { return static_cast<int>((idx >> t) & 1); };
    if (ref < 0) {
      int parity = 0;
      for (int t = 0; t < n; ++t) parity ^= bit(t);
      dist[idx] = (parity ? eff.q_x : 1.0 - eff.q_x) / std::ldexp(1.0, n - 1);
      continue;
    }
    double p = 0.0;
    for (int common = 0; common < 2; ++common) {
      double branch = 0.5;
      for (int t = 0; t < n; ++t) {
        if (bases[t] == Basis::kX) {
          branch *= 0.5;
        } else if (pq) {
          branch *= bit(t) != common ? pq->q_bit : 1.0 - pq->q_bit;
        } else if (t == ref) {
          branch *= bit(t) == common ? 1.0 : 0.0;
        } else {
          branch *= bit(t) != common ? eff.q_z : 1.0 - eff.q_z;
        }
      }
      p += branch;
    }
    dist[idx] = p;
  }
  return dist;
}

}  // namespace acka
