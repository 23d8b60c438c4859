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

#include "acka/hash.h"

#include <stdexcept>

namespace acka {

ToeplitzHash::ToeplitzHash(std::size_t in_len, std::size_t out_len,
                           const BitString& seed)
    : in_len_(in_len), out_len_(out_len) {
  if (seed.size() != SeedLength(in_len, out_len)) {
    throw std::invalid_argument("Toeplitz seed length must be in + out - 1");
  }
  seed_ = seed.Pack();
  seed_.push_back(0);
  seed_.push_back(0);
}

std::uint64_t ToeplitzHash::SeedWord(std::size_t bit_offset) const {
  std::size_t w = bit_offset / 64;
  unsigned s = bit_offset % 64;
  if (s == 0) return seed_[w];
  return (seed_[w] >> s) | (seed_[w + 1] << (64 - s));
}

BitString ToeplitzHash::Apply(const BitString& input) const {
  if (input.size() != in_len_) {
    throw std::invalid_argument("hash input length mismatch");
  }
  std::vector<std::uint64_t> x = input.Pack();
  BitString out(out_len_);
  for (std::size_t i = 0; i < out_len_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < x.size(); ++w) acc ^= SeedWord(i + 64 * w) & x[w];
    out.set(i, static_cast<Bit>(__builtin_parityll(acc)));
  }
  return out;
}

std::vector<std::uint64_t> ToeplitzHash::Column(std::size_t j) const {
  if (j >= in_len_) throw std::out_of_range("Toeplitz column");
  std::vector<std::uint64_t> col((out_len_ + 63) / 64, 0);
  for (std::size_t w = 0; w < col.size(); ++w) col[w] = SeedWord(j + 64 * w);
  if (out_len_ % 64) col.back() &= (std::uint64_t{1} << (out_len_ % 64)) - 1;
  return col;
}

}  // namespace acka
