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

#ifndef ACKA_RANDOMNESS_H_
#define ACKA_RANDOMNESS_H_

#include <cstdint>
#include <random>
#include <vector>

#include "acka/bitstring.h"
#include "acka/core.h"

namespace acka {

// Stream identifiers mixed into the run seed. Each consumer owns one stream.
enum class Stream : std::uint64_t {
  kParty = 0x100,     // + party index
  kBeacon = 0x200,
  kSource = 0x300,
  kAdversary = 0x400,
  kKeyPool = 0x500,
};

// SplitMix64 finalizer over (seed, stream); distinct streams get unrelated
// seeds.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);
std::mt19937_64 MakeEngine(std::uint64_t seed, Stream stream,
                           std::uint64_t offset = 0);

// Source of the coin flips parties make inside the classical sub-protocols
// (Parity shares, Veto q_j choices, Notification choices).
class RandomTape {
 public:
  virtual ~RandomTape() = default;
  virtual Bit Draw(PartyId who) = 0;
};

// One private generator per party.
class PartyRandomness final : public RandomTape {
 public:
  PartyRandomness(int n, std::uint64_t seed);

  Bit Draw(PartyId who) override;
  std::mt19937_64& engine(PartyId who) { return slots_.at(who.value).engine; }
  BitString RandomBits(PartyId who, std::size_t length) {
    return BitString::Random(length, engine(who));
  }

 private:
  struct Slot {
    std::mt19937_64 engine;
    std::uint64_t buffer = 0;
    int available = 0;
  };
  std::vector<Slot> slots_;
};

// Replays a fixed bit sequence regardless of which party draws; used to
// enumerate every coin-flip outcome of small instances.
class ScriptedTape final : public RandomTape {
 public:
  explicit ScriptedTape(std::vector<Bit> bits) : bits_(std::move(bits)) {}
  // Bits of `pattern`, least significant first.
  static ScriptedTape FromPattern(std::uint64_t pattern, int length);

  Bit Draw(PartyId who) override;
  std::size_t consumed() const { return next_; }

 private:
  std::vector<Bit> bits_;
  std::size_t next_ = 0;
};

}  // namespace acka

#endif  // ACKA_RANDOMNESS_H_
