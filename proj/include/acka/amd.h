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

#ifndef ACKA_AMD_H_
#define ACKA_AMD_H_

#include <cstdint>
#include <optional>
#include <random>

#include "acka/bitstring.h"

namespace acka {

// GF(2^bits) for 1 <= bits <= 64, elements as the low `bits` bits of a word.
// The modulus is the numerically smallest irreducible polynomial of that
// degree.
class BinaryField {
 public:
  explicit BinaryField(int bits);

  int bits() const { return bits_; }
  // Low coefficients of the modulus; the x^bits term is implicit.
  std::uint64_t modulus_tail() const { return tail_; }
  std::uint64_t mask() const { return mask_; }

  std::uint64_t Mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t Pow(std::uint64_t a, std::uint64_t e) const;

  // Ben-Or irreducibility test for x^degree + tail over GF(2).
  static bool IsIrreducible(int degree, std::uint64_t tail);

 private:
  int bits_;
  std::uint64_t tail_;
  std::uint64_t mask_;
};

// Systematic AMD code: F(x) = (x, r, f(x, r)) with r uniform in GF(2^b),
//   b = ceil(log2 k) + ceil(log2 1/eps),
//   f(x, r) = r^(d+2) + sum_{i=1..d} x_i r^i,
// x split into d b-bit field elements, d padded to be odd.
class AmdCode {
 public:
  AmdCode(std::size_t message_len, double eps_enc);

  std::size_t message_len() const { return message_len_; }
  std::size_t codeword_len() const { return message_len_ + 2 * field_.bits(); }
  int field_bits() const { return field_.bits(); }
  // Worst-case probability that a fixed nonzero offset goes undetected.
  double tamper_bound() const;

  BitString Encode(const BitString& message, std::mt19937_64& rng) const;
  std::optional<BitString> Decode(const BitString& codeword) const;

 private:
  std::uint64_t Tag(const BitString& message, std::uint64_t r) const;

  std::size_t message_len_;
  BinaryField field_;
  std::size_t elements_;  // d after padding to odd
};

}  // namespace acka

#endif  // ACKA_AMD_H_
