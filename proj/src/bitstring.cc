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

#include "acka/bitstring.h"

#include <algorithm>
#include <stdexcept>

namespace acka {

BitString::BitString(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) bits_.push_back(static_cast<Bit>(b & 1));
}

BitString::BitString(std::vector<Bit> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b &= 1;
}

BitString BitString::Random(std::size_t length, std::mt19937_64& rng) {
  BitString out(length);
  std::size_t i = 0;
  while (i < length) {
    std::uint64_t word = rng();
    for (int k = 0; k < 64 && i < length; ++k, ++i) {
      out.bits_[i] = static_cast<Bit>((word >> k) & 1);
    }
  }
  return out;
}

BitString BitString::FromUint(std::uint64_t value, std::size_t width) {
  BitString out(width);
  for (std::size_t i = 0; i < width; ++i) {
    std::size_t shift = width - 1 - i;
    out.bits_[i] = shift < 64 ? static_cast<Bit>((value >> shift) & 1) : 0;
  }
  return out;
}

BitString BitString::FromString(const std::string& text) {
  BitString out;
  for (char c : text) {
    if (c == '0' || c == '1') {
      out.push_back(static_cast<Bit>(c - '0'));
    } else {
      throw std::invalid_argument("bit string may only contain 0 and 1");
    }
  }
  return out;
}

void BitString::append(const BitString& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::slice(std::size_t pos, std::size_t len) const {
  if (pos + len > bits_.size()) throw std::out_of_range("BitString::slice");
  return BitString(std::vector<Bit>(bits_.begin() + pos,
                                    bits_.begin() + pos + len));
}

std::size_t BitString::weight() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::uint64_t BitString::ToUint() const {
  std::uint64_t v = 0;
  std::size_t n = std::min<std::size_t>(bits_.size(), 64);
  for (std::size_t i = 0; i < n; ++i) v = (v << 1) | bits_[i];
  return v;
}

std::string BitString::ToString() const {
  std::string s;
  s.reserve(bits_.size());
  for (Bit b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

std::string BitString::ToHex() const {
  static const char kDigits[] = "0123456789abcdef";
  if (bits_.empty()) return "";
  std::size_t pad = (4 - bits_.size() % 4) % 4;
  std::string s;
  unsigned nibble = 0;
  std::size_t filled = pad;
  for (Bit b : bits_) {
    nibble = (nibble << 1) | b;
    if (++filled == 4) {
      s.push_back(kDigits[nibble]);
      nibble = 0;
      filled = 0;
    }
  }
  return s;
}

std::vector<std::uint64_t> BitString::Pack() const {
  std::vector<std::uint64_t> words((bits_.size() + 63) / 64, 0);
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    words[i / 64] |= static_cast<std::uint64_t>(bits_[i]) << (i % 64);
  }
  return words;
}

BitString BitString::Unpack(const std::vector<std::uint64_t>& words,
                            std::size_t length) {
  BitString out(length);
  for (std::size_t i = 0; i < length; ++i) {
    out.bits_[i] = static_cast<Bit>((words[i / 64] >> (i % 64)) & 1);
  }
  return out;
}

BitString& BitString::operator^=(const BitString& other) {
  if (other.size() != size()) {
    throw std::invalid_argument("BitString xor: length mismatch");
  }
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
  return *this;
}

BitString Concat(const BitString& a, const BitString& b) {
  BitString out = a;
  out.append(b);
  return out;
}

}  // namespace acka
