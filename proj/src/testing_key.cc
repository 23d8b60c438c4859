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

#include "acka/testing_key.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace acka {
namespace {

constexpr std::uint64_t kTotal = std::uint64_t{1} << 24;
constexpr std::uint64_t kTop = 0xFFFFFFFFULL;
constexpr std::uint64_t kHalf = 0x80000000ULL;
constexpr std::uint64_t kFirstQtr = 0x40000000ULL;
constexpr std::uint64_t kThirdQtr = 0xC0000000ULL;

void Narrow(std::uint64_t& low, std::uint64_t& high, Bit symbol,
            std::uint64_t zero_freq) {
  std::uint64_t range = high - low + 1;
  std::uint64_t lo = symbol ? zero_freq : 0;
  std::uint64_t hi = symbol ? kTotal : zero_freq;
  high = low + range * hi / kTotal - 1;
  low = low + range * lo / kTotal;
}

}  // namespace

ScheduleCoder::ScheduleCoder(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0,1]");
  if (p == 0.0 || p == 1.0) {
    degenerate_ = true;
    constant_ = p == 1.0;
    zero_freq_ = 0;
    return;
  }
  double f = std::round((1.0 - p) * static_cast<double>(kTotal));
  f = std::clamp(f, 1.0, static_cast<double>(kTotal - 1));
  zero_freq_ = static_cast<std::uint32_t>(f);
}

BitString ScheduleCoder::Encode(const BitString& schedule) const {
  BitString out;
  if (degenerate_) return out;
  std::uint64_t low = 0, high = kTop;
  std::size_t pending = 0;
  auto emit = [&](Bit b) {
    out.push_back(b);
    for (; pending > 0; --pending) out.push_back(b ^ 1);
  };
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    Narrow(low, high, schedule[i], zero_freq_);
    for (;;) {
      if (high < kHalf) {
        emit(0);
      } else if (low >= kHalf) {
        emit(1);
        low -= kHalf;
        high -= kHalf;
      } else if (low >= kFirstQtr && high < kThirdQtr) {
        ++pending;
        low -= kFirstQtr;
        high -= kFirstQtr;
      } else {
        break;
      }
      low <<= 1;
      high = (high << 1) | 1;
    }
  }
  ++pending;
  emit(low < kFirstQtr ? 0 : 1);
  return out;
}

BitString ScheduleCoder::Decode(const BitString& code, std::size_t rounds) const {
  if (degenerate_) {
    BitString out(rounds);
    for (std::size_t i = 0; i < rounds; ++i) out.set(i, constant_);
    return out;
  }
  std::size_t next = 0;
  auto read = [&]() -> std::uint64_t {
    return next < code.size() ? code[next++] : (++next, 0);
  };
  std::uint64_t value = 0;
  for (int i = 0; i < 32; ++i) value = (value << 1) | read();
  std::uint64_t low = 0, high = kTop;
  BitString out(rounds);
  for (std::size_t i = 0; i < rounds; ++i) {
    std::uint64_t range = high - low + 1;
    std::uint64_t cum = ((value - low + 1) * kTotal - 1) / range;
    Bit symbol = cum >= zero_freq_ ? 1 : 0;
    out.set(i, symbol);
    Narrow(low, high, symbol, zero_freq_);
    for (;;) {
      if (high < kHalf) {
      } else if (low >= kHalf) {
        value -= kHalf;
        low -= kHalf;
        high -= kHalf;
      } else if (low >= kFirstQtr && high < kThirdQtr) {
        value -= kFirstQtr;
        low -= kFirstQtr;
        high -= kFirstQtr;
      } else {
        break;
      }
      low <<= 1;
      high = (high << 1) | 1;
      value = (value << 1) | read();
    }
  }
  return out;
}

TestingKey DrawTestingKey(std::size_t rounds, double p, std::size_t budget,
                          std::mt19937_64& rng, int max_attempts) {
  ScheduleCoder coder(p);
  std::bernoulli_distribution test_round(p);
  TestingKey result;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    BitString schedule(rounds);
    for (std::size_t i = 0; i < rounds; ++i) schedule.set(i, test_round(rng));
    BitString code = coder.Encode(schedule);
    if (code.size() <= budget) {
      code.resize(budget);
      result.schedule = std::move(schedule);
      result.key = std::move(code);
      return result;
    }
    ++result.resamples;
  }
  throw std::runtime_error("testing key: no schedule compressed within budget");
}

}  // namespace acka
