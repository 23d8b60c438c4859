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

#ifndef ACKA_EC_H_
#define ACKA_EC_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "acka/bitstring.h"
#include "acka/netsim.h"

namespace acka {

enum class EcBackend { kIdealized, kLinearBlock };

EcBackend ParseEcBackend(const std::string& name);
const char* EcBackendName(EcBackend backend);

// ceil(key_len * h(q_z)); zero when q_z = 0.
std::size_t SyndromeLength(std::size_t key_len, double q_z);

// One-way reconciliation. Alice calls Syndrome once; each Bob calls Correct.
class ErrorCorrector {
 public:
  virtual ~ErrorCorrector() = default;
  virtual std::size_t syndrome_len() const = 0;
  virtual BitString Syndrome(const BitString& key) = 0;
  // nullopt when decoding fails.
  virtual std::optional<BitString> Correct(const BitString& noisy,
                                           const BitString& syndrome) = 0;
};

// Syndrome is a Toeplitz hash of the key drawn from the beacon. Decoding is a
// genie: if the received syndrome equals the one Alice issued, Bob obtains
// Alice's key; otherwise his key is returned unchanged.
std::unique_ptr<ErrorCorrector> MakeIdealizedCorrector(ChannelFabric& fabric,
                                                       std::size_t key_len,
                                                       std::size_t syndrome_len);

// Key split into blocks of `block_len` bits, each with its own Toeplitz
// parity checks (syndrome bits spread so they sum to `syndrome_len`).
// Each block is decoded to the lowest-weight error pattern of weight <= 3
// matching its syndrome; no match gives nullopt.
std::unique_ptr<ErrorCorrector> MakeLinearBlockCorrector(ChannelFabric& fabric,
                                                         std::size_t key_len,
                                                         std::size_t syndrome_len,
                                                         std::size_t block_len);

std::unique_ptr<ErrorCorrector> MakeCorrector(EcBackend backend,
                                              ChannelFabric& fabric,
                                              std::size_t key_len,
                                              std::size_t syndrome_len,
                                              std::size_t block_len);

}  // namespace acka

#endif  // ACKA_EC_H_
