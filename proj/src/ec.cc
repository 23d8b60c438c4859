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

#include "acka/ec.h"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "acka/core.h"
#include "acka/hash.h"

namespace acka {

EcBackend ParseEcBackend(const std::string& name) {
  if (name == "idealized") return EcBackend::kIdealized;
  if (name == "linear") return EcBackend::kLinearBlock;
  throw ConfigError("ec_backend must be idealized or linear");
}

const char* EcBackendName(EcBackend backend) {
  return backend == EcBackend::kIdealized ? "idealized" : "linear";
}

std::size_t SyndromeLength(std::size_t key_len, double q_z) {
  return static_cast<std::size_t>(
      CeilLength(static_cast<double>(key_len) * BinaryEntropy(q_z)));
}

namespace {

class IdealizedCorrector final : public ErrorCorrector {
 public:
  IdealizedCorrector(ChannelFabric& fabric, std::size_t key_len,
                     std::size_t syndrome_len)
      : hash_(fabric.BeaconSample(key_len, syndrome_len)) {}

  std::size_t syndrome_len() const override { return hash_.out_len(); }

  BitString Syndrome(const BitString& key) override {
    reference_ = key;
    issued_ = hash_.Apply(key);
    return *issued_;
  }

  std::optional<BitString> Correct(const BitString& noisy,
                                   const BitString& syndrome) override {
    if (!issued_) throw std::logic_error("Correct called before Syndrome");
    if (noisy.size() != reference_.size()) {
      throw std::invalid_argument("EC: key length mismatch");
    }
    if (syndrome == *issued_) return reference_;
    return noisy;
  }

 private:
  ToeplitzHash hash_;
  BitString reference_;
  std::optional<BitString> issued_;
};

using Packed = std::vector<std::uint64_t>;

std::string KeyOf(const Packed& v) {
  std::string s(v.size() * sizeof(std::uint64_t), '\0');
  std::memcpy(s.data(), v.data(), s.size());
  return s;
}

void XorInto(Packed& a, const Packed& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

class LinearBlockCorrector final : public ErrorCorrector {
 public:
  LinearBlockCorrector(ChannelFabric& fabric, std::size_t key_len,
                       std::size_t syndrome_len, std::size_t block_len)
      : key_len_(key_len), syndrome_len_(syndrome_len), block_len_(block_len) {
    if (block_len == 0) throw std::invalid_argument("EC block length must be positive");
    blocks_ = key_len == 0 ? 0 : (key_len + block_len - 1) / block_len;
    std::size_t widest = 0;
    for (std::size_t i = 0; i < blocks_; ++i) {
      std::size_t s = syndrome_len / blocks_ + (i < syndrome_len % blocks_ ? 1 : 0);
      if (s > BlockLength(i)) {
        throw std::invalid_argument("EC: syndrome longer than its block");
      }
      checks_.push_back(s);
      widest = std::max(widest, s);
    }
    if (blocks_ == 0 && syndrome_len > 0) {
      throw std::invalid_argument("EC: syndrome for an empty key");
    }
    hash_ = std::make_unique<ToeplitzHash>(fabric.BeaconSample(block_len, widest));
  }

  std::size_t syndrome_len() const override { return syndrome_len_; }

  BitString Syndrome(const BitString& key) override {
    if (key.size() != key_len_) throw std::invalid_argument("EC: key length mismatch");
    BitString out;
    for (std::size_t i = 0; i < blocks_; ++i) out.append(BlockSyndrome(key, i));
    return out;
  }

  std::optional<BitString> Correct(const BitString& noisy,
                                   const BitString& syndrome) override {
    if (noisy.size() != key_len_ || syndrome.size() != syndrome_len_) {
      throw std::invalid_argument("EC: length mismatch");
    }
    BitString fixed = noisy;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < blocks_; ++i) {
      BitString diff = BlockSyndrome(noisy, i) ^ syndrome.slice(offset, checks_[i]);
      offset += checks_[i];
      if (diff.is_zero()) continue;
      auto flips = DecodeBlock(i, diff.Pack());
      if (!flips) return std::nullopt;
      for (std::size_t pos : *flips) fixed.flip(i * block_len_ + pos);
    }
    return fixed;
  }

 private:
  std::size_t BlockLength(std::size_t i) const {
    return std::min(block_len_, key_len_ - i * block_len_);
  }

  BitString BlockSyndrome(const BitString& key, std::size_t i) const {
    BitString block = key.slice(i * block_len_, BlockLength(i));
    block.resize(block_len_);
    return hash_->Apply(block).slice(0, checks_[i]);
  }

  Packed ColumnPrefix(std::size_t j, std::size_t rows) const {
    Packed col = hash_->Column(j);
    col.resize((rows + 63) / 64);
    if (rows % 64) col.back() &= (std::uint64_t{1} << (rows % 64)) - 1;
    return col;
  }

  std::optional<std::vector<std::size_t>> DecodeBlock(std::size_t i,
                                                      const Packed& target) const {
    const std::size_t len = BlockLength(i);
    const std::size_t rows = checks_[i];
    std::vector<Packed> cols(len);
    std::unordered_map<std::string, std::size_t> where;
    for (std::size_t j = 0; j < len; ++j) {
      cols[j] = ColumnPrefix(j, rows);
      where.emplace(KeyOf(cols[j]), j);
    }
    auto single = where.find(KeyOf(target));
    if (single != where.end()) return std::vector<std::size_t>{single->second};
    for (std::size_t a = 0; a < len; ++a) {
      Packed rest = target;
      XorInto(rest, cols[a]);
      auto it = where.find(KeyOf(rest));
      if (it != where.end() && it->second != a) {
        return std::vector<std::size_t>{a, it->second};
      }
    }
    for (std::size_t a = 0; a < len; ++a) {
      for (std::size_t b = a + 1; b < len; ++b) {
        Packed rest = target;
        XorInto(rest, cols[a]);
        XorInto(rest, cols[b]);
        auto it = where.find(KeyOf(rest));
        if (it != where.end() && it->second != a && it->second != b) {
          return std::vector<std::size_t>{a, b, it->second};
        }
      }
    }
    return std::nullopt;
  }

  std::size_t key_len_;
  std::size_t syndrome_len_;
  std::size_t block_len_;
  std::size_t blocks_ = 0;
  std::vector<std::size_t> checks_;
  std::unique_ptr<ToeplitzHash> hash_;
};

}  // namespace

std::unique_ptr<ErrorCorrector> MakeIdealizedCorrector(ChannelFabric& fabric,
                                                       std::size_t key_len,
                                                       std::size_t syndrome_len) {
  return std::make_unique<IdealizedCorrector>(fabric, key_len, syndrome_len);
}

std::unique_ptr<ErrorCorrector> MakeLinearBlockCorrector(ChannelFabric& fabric,
                                                         std::size_t key_len,
                                                         std::size_t syndrome_len,
                                                         std::size_t block_len) {
  return std::make_unique<LinearBlockCorrector>(fabric, key_len, syndrome_len,
                                                block_len);
}

std::unique_ptr<ErrorCorrector> MakeCorrector(EcBackend backend,
                                              ChannelFabric& fabric,
                                              std::size_t key_len,
                                              std::size_t syndrome_len,
                                              std::size_t block_len) {
  if (backend == EcBackend::kIdealized) {
    return MakeIdealizedCorrector(fabric, key_len, syndrome_len);
  }
  return MakeLinearBlockCorrector(fabric, key_len, syndrome_len, block_len);
}

}  // namespace acka
