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

#include "acka/randomness.h"

#include <stdexcept>

namespace acka {

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::mt19937_64 MakeEngine(std::uint64_t seed, Stream stream,
                           std::uint64_t offset) {
  std::uint64_t s = DeriveSeed(seed, static_cast<std::uint64_t>(stream) + offset);
  std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32)};
  return std::mt19937_64(seq);
}

PartyRandomness::PartyRandomness(int n, std::uint64_t seed) {
  slots_.reserve(n);
  for (int t = 0; t < n; ++t) {
    slots_.push_back(Slot{MakeEngine(seed, Stream::kParty, t)});
  }
}

Bit PartyRandomness::Draw(PartyId who) {
  Slot& s = slots_.at(who.value);
  if (s.available == 0) {
    s.buffer = s.engine();
    s.available = 64;
  }
  Bit b = static_cast<Bit>(s.buffer & 1);
  s.buffer >>= 1;
  --s.available;
  return b;
}

ScriptedTape ScriptedTape::FromPattern(std::uint64_t pattern, int length) {
  std::vector<Bit> bits(length);
  for (int i = 0; i < length; ++i) bits[i] = static_cast<Bit>((pattern >> i) & 1);
  return ScriptedTape(std::move(bits));
}

Bit ScriptedTape::Draw(PartyId) {
  if (next_ >= bits_.size()) throw std::out_of_range("scripted tape exhausted");
  return bits_[next_++];
}

}  // namespace acka
