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

#ifndef ACKA_BITSTRING_H_
#define ACKA_BITSTRING_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace acka {

using Bit = std::uint8_t;

// Ordered sequence of bits, one byte per bit. Every stored value is 0 or 1.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t length) : bits_(length, 0) {}
  BitString(std::initializer_list<int> bits);
  explicit BitString(std::vector<Bit> bits);

  static BitString Random(std::size_t length, std::mt19937_64& rng);
  // Big-endian fixed-width encoding of `value`.
  static BitString FromUint(std::uint64_t value, std::size_t width);
  // Parses a string of '0'/'1' characters.
  static BitString FromString(const std::string& text);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  Bit operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, Bit b) { bits_[i] = b & 1; }
  void flip(std::size_t i) { bits_[i] ^= 1; }
  void push_back(Bit b) { bits_.push_back(b & 1); }
  void append(const BitString& other);
  void resize(std::size_t length) { bits_.resize(length, 0); }

  BitString slice(std::size_t pos, std::size_t len) const;
  std::size_t weight() const;
  bool is_zero() const { return weight() == 0; }
  // Big-endian value of the first min(size, 64) bits.
  std::uint64_t ToUint() const;
  std::string ToString() const;
  // Lower-case hex, most significant nibble first, left-padded to whole nibbles.
  std::string ToHex() const;

  // Packs into 64-bit words, bit i at word i/64, position i%64.
  std::vector<std::uint64_t> Pack() const;
  static BitString Unpack(const std::vector<std::uint64_t>& words,
                          std::size_t length);

  BitString& operator^=(const BitString& other);
  friend BitString operator^(BitString a, const BitString& b) {
    a ^= b;
    return a;
  }
  friend bool operator==(const BitString&, const BitString&) = default;

  const std::vector<Bit>& bits() const { return bits_; }

 private:
  std::vector<Bit> bits_;
};

BitString Concat(const BitString& a, const BitString& b);

}  // namespace acka

#endif  // ACKA_BITSTRING_H_
