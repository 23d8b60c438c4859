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

#include "acka/amd.h"

#include <cmath>
#include <stdexcept>

#include "acka/core.h"

namespace acka {
namespace {

using u128 = unsigned __int128;

int Degree(u128 p) {
  int d = -1;
  while (p) {
    p >>= 1;
    ++d;
  }
  return d;
}

u128 ClMul(std::uint64_t a, std::uint64_t b) {
  u128 acc = 0;
  u128 wide = a;
  while (b) {
    if (b & 1) acc ^= wide;
    wide <<= 1;
    b >>= 1;
  }
  return acc;
}

// p mod m over GF(2); deg m <= 64.
u128 PolyMod(u128 p, u128 m) {
  int dm = Degree(m);
  for (int d = Degree(p); d >= dm; d = Degree(p)) p ^= m << (d - dm);
  return p;
}

u128 PolyGcd(u128 a, u128 b) {
  while (b) {
    u128 r = PolyMod(a, b);
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

bool BinaryField::IsIrreducible(int degree, std::uint64_t tail) {
  if (degree < 1 || degree > 64) return false;
  const u128 f = (u128{1} << degree) | tail;
  if (degree == 1) return true;
  if ((tail & 1) == 0) return false;
  // x^(2^i) mod f for i = 1..degree/2; f is irreducible iff every
  // gcd(f, x^(2^i) - x) is 1.
  u128 x = 2;
  u128 power = x;
  for (int i = 1; i <= degree / 2; ++i) {
    std::uint64_t lo = static_cast<std::uint64_t>(power);
    power = PolyMod(ClMul(lo, lo), f);
    if (Degree(PolyGcd(f, power ^ x)) > 0) return false;
  }
  return true;
}

BinaryField::BinaryField(int bits) : bits_(bits) {
  if (bits < 1 || bits > 64) {
    throw std::invalid_argument("binary field width must be in [1, 64]");
  }
  mask_ = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  tail_ = 1;
  if (bits == 1) {
    tail_ = 0;
  } else {
    while (!IsIrreducible(bits, tail_)) tail_ += 2;
  }
}

std::uint64_t BinaryField::Mul(std::uint64_t a, std::uint64_t b) const {
  const u128 f = (u128{1} << bits_) | tail_;
  return static_cast<std::uint64_t>(PolyMod(ClMul(a, b), f));
}

std::uint64_t BinaryField::Pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t result = 1;
  while (e) {
    if (e & 1) result = Mul(result, a);
    a = Mul(a, a);
    e >>= 1;
  }
  return result;
}

namespace {

int FieldBits(std::size_t message_len, double eps_enc) {
  if (message_len == 0) throw std::invalid_argument("AMD message must be nonempty");
  if (!(eps_enc > 0.0 && eps_enc < 1.0)) {
    throw std::invalid_argument("eps_enc must be in (0,1)");
  }
  int b = CeilLog2(static_cast<std::uint64_t>(message_len)) + CeilLog2(1.0 / eps_enc);
  if (b > 64) throw ConfigError("AMD field exceeds 64 bits; raise eps_enc");
  return b;
}

}  // namespace

AmdCode::AmdCode(std::size_t message_len, double eps_enc)
    : message_len_(message_len), field_(FieldBits(message_len, eps_enc)) {
  std::size_t b = static_cast<std::size_t>(field_.bits());
  elements_ = (message_len + b - 1) / b;
  if (elements_ % 2 == 0) ++elements_;
}

double AmdCode::tamper_bound() const {
  return static_cast<double>(elements_ + 1) / std::ldexp(1.0, field_.bits());
}

std::uint64_t AmdCode::Tag(const BitString& message, std::uint64_t r) const {
  const std::size_t b = static_cast<std::size_t>(field_.bits());
  // Horner over x_d, ..., x_1, then one more multiply by r.
  std::uint64_t acc = 0;
  for (std::size_t i = elements_; i >= 1; --i) {
    std::uint64_t xi = 0;
    for (std::size_t k = 0; k < b; ++k) {
      std::size_t pos = (i - 1) * b + k;
      Bit bit = pos < message.size() ? message[pos] : 0;
      xi = (xi << 1) | bit;
    }
    acc = field_.Mul(acc ^ xi, r);
  }
  return acc ^ field_.Pow(r, elements_ + 2);
}

BitString AmdCode::Encode(const BitString& message, std::mt19937_64& rng) const {
  if (message.size() != message_len_) {
    throw std::invalid_argument("AMD encode: message length mismatch");
  }
  const std::size_t b = static_cast<std::size_t>(field_.bits());
  std::uint64_t r = rng() & field_.mask();
  BitString cw = message;
  cw.append(BitString::FromUint(r, b));
  cw.append(BitString::FromUint(Tag(message, r), b));
  return cw;
}

std::optional<BitString> AmdCode::Decode(const BitString& codeword) const {
  if (codeword.size() != codeword_len()) {
    throw std::invalid_argument("AMD decode: codeword length mismatch");
  }
  const std::size_t b = static_cast<std::size_t>(field_.bits());
  BitString message = codeword.slice(0, message_len_);
  std::uint64_t r = codeword.slice(message_len_, b).ToUint();
  std::uint64_t tag = codeword.slice(message_len_ + b, b).ToUint();
  if (Tag(message, r) != tag) return std::nullopt;
  return message;
}

}  // namespace acka
