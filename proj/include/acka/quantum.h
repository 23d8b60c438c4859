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

#ifndef ACKA_QUANTUM_H_
#define ACKA_QUANTUM_H_

#include <cstdint>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "acka/bitstring.h"
#include "acka/core.h"

namespace acka {

struct DirectRates {
  double q_x = 0.0;
  double q_z = 0.0;
};

// Independent per-qubit Pauli flips applied to an ideal GHZ state.
struct PauliPerQubit {
  double q_phase = 0.0;
  double q_bit = 0.0;
};

using NoiseModel = std::variant<DirectRates, PauliPerQubit>;

// Q_X = (1 - (1 - 2 q_phase)^n) / 2 and Q_Z = 2 q_bit (1 - q_bit) for the
// per-qubit model; DirectRates pass through.
DirectRates EffectiveRates(const NoiseModel& noise, int n);
void ValidateNoise(const NoiseModel& noise);

enum class Basis : std::uint8_t { kZ, kX };

struct RoundSample {
  bool detected = false;
  std::vector<Bit> outcomes;  // empty when lost
};

// One source emission. Detection requires all n photons (probability
// eta^n). Given detection:
//  - all X: uniform outcomes whose parity is odd with probability Q_X;
//  - otherwise the Z-measurers share a reference bit (the `reference`
//    party's outcome, default the lowest-index Z-measurer) with independent
//    Bernoulli(Q_Z) flips on the others, and X-measurers are uniform.
// Under PauliPerQubit the flips are sampled per qubit instead.
RoundSample SampleGhzRound(int n, double eta, const NoiseModel& noise,
                           const std::vector<Basis>& bases, std::mt19937_64& rng,
                           std::optional<PartyId> reference = std::nullopt);

std::vector<Bit> SampleDetectedOutcomes(const NoiseModel& noise,
                                        const std::vector<Basis>& bases,
                                        std::mt19937_64& rng,
                                        std::optional<PartyId> reference = std::nullopt);

// Emissions needed until one GHZ state is detected (>= 1).
std::int64_t AttemptsUntilDetected(double detect_prob, std::mt19937_64& rng);

// floor(n/2) eta^2 [1 - h(Q_Xb) - h(Q_Zb)], or 0 when the bracket is <= 0.
double BellSecretBitSupply(int n, double eta, double q_xb, double q_zb);

// Exact outcome distribution for n <= 4; entry i is the probability that
// party t's outcome is bit t of i.
std::vector<double> JointDistributionOracle(int n, const NoiseModel& noise,
                                            const std::vector<Basis>& bases,
                                            std::optional<PartyId> reference = std::nullopt);

}  // namespace acka

#endif  // ACKA_QUANTUM_H_
