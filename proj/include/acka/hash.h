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

#ifndef ACKA_HASH_H_
#define ACKA_HASH_H_

#include <cstdint>
#include <vector>

#include "acka/bitstring.h"
#include "acka/netsim.h"

namespace acka {

// Toeplitz family {0,1}^in -> {0,1}^out indexed by in + out - 1 seed bits:
// output bit i is the parity of seed[i, i + in) AND x.
class ToeplitzHash {
 public:
  ToeplitzHash(std::size_t in_len, std::size_t out_len, const BitString& seed);
  explicit ToeplitzHash(const BeaconOutput& beacon)
      : ToeplitzHash(beacon.in_len, beacon.out_len, beacon.hash_seed) {}

  std::size_t in_len() const { return in_len_; }
  std::size_t out_len() const { return out_len_; }
  static std::size_t SeedLength(std::size_t in_len, std::size_t out_len) {
    return in_len + out_len == 0 ? 0 : in_len + out_len - 1;
  }

  BitString Apply(const BitString& input) const;
  // Column j of the matrix, packed (row i at bit i).
  std::vector<std::uint64_t> Column(std::size_t j) const;

 private:
  std::uint64_t SeedWord(std::size_t bit_offset) const;

  std::size_t in_len_;
  std::size_t out_len_;
  std::vector<std::uint64_t> seed_;  // packed, one spare zero word
};

}  // namespace acka

#endif  // ACKA_HASH_H_
