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

#ifndef ACKA_TESTING_KEY_H_
#define ACKA_TESTING_KEY_H_

#include <cstdint>
#include <optional>
#include <random>

#include "acka/bitstring.h"

namespace acka {

// Binary arithmetic coder for i.i.d. Bernoulli(p) schedules (1 = test
// round). Probabilities are quantized to 24-bit frequencies.
class ScheduleCoder {
 public:
  explicit ScheduleCoder(double p);

  BitString Encode(const BitString& schedule) const;
  // Reads bits past the end of `code` as zeros.
  BitString Decode(const BitString& code, std::size_t rounds) const;

 private:
  std::uint32_t zero_freq_;  // out of 2^24
  bool degenerate_ = false;
  Bit constant_ = 0;
};

struct TestingKey {
  BitString schedule;     // L bits, 1 = test round
  BitString key;          // exactly `budget` bits
  int resamples = 0;      // schedules rejected for compressing above budget
};

// Draws Bernoulli(p) schedules until one encodes within `budget` bits, then
// zero-pads the code to exactly `budget` bits.
TestingKey DrawTestingKey(std::size_t rounds, double p, std::size_t budget,
                          std::mt19937_64& rng, int max_attempts = 10000);

}  // namespace acka

#endif  // ACKA_TESTING_KEY_H_
